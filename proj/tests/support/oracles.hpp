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

// Reference implementations used only by tests. Each one is written
// independently of the library: plain record scans instead of tidsets,
// probabilities instead of integer counts, and std::set arithmetic instead of
// sorted-vector set algebra.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rulelab/dataset.hpp"
#include "rulelab/measures.hpp"
#include "rulelab/miner.hpp"

namespace rulelab::testing {

std::string data_path(const std::string& file);
Dataset load_weather();

/// Rules as label sets, so they compare without depending on item ids.
struct PlainRule {
  std::set<std::string> antecedent;
  std::set<std::string> consequent;
  std::set<RecordId> cover_x;
  std::set<RecordId> cover_xy;

  auto operator<=>(const PlainRule&) const = default;
};

PlainRule plain(const ItemCatalog& catalog, const AssociationRule& r);

/// Every itemset (at most one value per attribute) with count >= threshold,
/// found by scanning records for each candidate. Thresholds are per mille so
/// the comparison is exact integer arithmetic.
std::vector<std::pair<std::set<ItemId>, std::set<RecordId>>> brute_force_itemsets(
    const Dataset& d, unsigned support_permille);

/// Every rule X -> Y over those itemsets with a*1000 >= permille*|m(X)|.
std::set<PlainRule> brute_force_rules(const Dataset& d, unsigned support_permille,
                                      unsigned confidence_permille);

/// Table of nominal values with at most `max_records` rows, `max_attributes`
/// columns and `max_values` values per column; some cells missing when
/// `allow_missing`.
Dataset random_dataset(std::mt19937_64& rng, std::size_t max_records, std::size_t max_attributes,
                       std::size_t max_values, bool allow_missing = false);

ContingencyTable random_table(std::mt19937_64& rng, std::uint64_t max_n = 200);

/// Measure evaluated literally from probabilities in long double, following
/// the textbook formula for each measure. Empty when a denominator vanishes.
std::optional<long double> literal_measure(MeasureId m, const ContingencyTable& t);

/// Straightforward transcription of the greedy rule cover with std::set,
/// returning (mining index, gain) pairs and the final uncovered count. The
/// threshold is in basis points (200 = 2%) so comparisons stay exact.
struct NaiveCover {
  std::vector<std::pair<std::size_t, std::size_t>> picks;
  std::size_t residual = 0;
  bool exhausted = false;
};
NaiveCover naive_greedy_cover(const std::vector<const AssociationRule*>& members,
                              unsigned threshold_bp);

/// Smallest number of member covers whose union reaches `target` records of
/// the cluster cover, by exhaustive subset enumeration.
std::size_t exhaustive_min_cover(const std::vector<std::set<RecordId>>& covers,
                                 std::size_t target);

}  // namespace rulelab::testing
