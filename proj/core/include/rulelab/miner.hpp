/*
   Copyright 2026 The rulelab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rulelab/dataset.hpp"
#include "rulelab/tidset.hpp"

namespace rulelab {

/// Sorted, duplicate-free item ids; never two values of one attribute.
using Itemset = std::vector<ItemId>;

struct FrequentItemset {
  Itemset items;
  TidSet cover;
};

/// X -> Y with the exact records each side matches.
struct AssociationRule {
  /// 1-based position in the deterministic mining order.
  std::size_t index = 0;
  Itemset antecedent;
  Itemset consequent;
  TidSet cover_x;
  TidSet cover_y;
  TidSet cover_xy;

  std::size_t support_count() const noexcept { return cover_xy.size(); }
};

struct MiningConfig {
  double min_support = 0.3;
  double min_confidence = 0.8;

  /// Throws ConfigError unless both fractions lie in (0, 1].
  void validate() const;
};

/// ceil(min_support * n), tolerant of decimal representation error.
std::size_t min_support_count(double min_support, std::size_t n_records);
bool meets_confidence(std::size_t n_xy, std::size_t n_x, double min_confidence);

/// Level-wise Apriori over record bitmaps. Output ordered by (size, item ids).
/// `threads` > 1 counts candidate supports concurrently; the result does not
/// depend on it.
std::vector<FrequentItemset> frequent_itemsets(const Dataset& d, double min_support,
                                               unsigned threads = 1);

/// Every split X u Y of every frequent itemset of size >= 2 whose confidence
/// reaches the threshold, numbered by confidence desc, support desc, then the
/// union itemset and finally the consequent (each by size, then item ids).
std::vector<AssociationRule> generate_rules(std::span<const FrequentItemset> frequents,
                                            const Dataset& d, double min_confidence);

struct RuleStats {
  double support = 0.0;
  double confidence = 0.0;
};

RuleStats rule_stats(const AssociationRule& r, std::size_t n_records);

/// Mined rules plus what is needed to interpret them without the records.
struct RuleSet {
  ItemCatalog catalog;
  std::size_t n_records = 0;
  MiningConfig config;
  std::vector<AssociationRule> rules;
};

RuleSet mine(const Dataset& d, const MiningConfig& config, unsigned threads = 1);

/// Integer percentage, halves rounded up (4/14 -> 29).
int rounded_percent(std::size_t numerator, std::size_t denominator);

std::string format_itemset(const ItemCatalog& catalog, const Itemset& items);
/// "X n(ids) ==> Y n(ids) sup:(p%) conf:(q%)"
std::string format_rule(const ItemCatalog& catalog, const AssociationRule& r,
                        std::size_t n_records);

/// Exact comparison of n_xy/n_x fractions.
int compare_confidence(const AssociationRule& a, const AssociationRule& b) noexcept;

}  // namespace rulelab
