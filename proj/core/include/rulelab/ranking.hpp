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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rulelab/measures.hpp"
#include "rulelab/miner.hpp"

namespace rulelab {

/// How many top-ranked rules survive pruning: an absolute count ("500") or a
/// fraction of the rule set ("21%", "0.21").
class TopK {
 public:
  static TopK count(std::size_t k);
  static TopK fraction(double f);
  /// "500" -> count; "21%" or "0.21" -> fraction. Throws ConfigError.
  static TopK parse(std::string_view text);

  bool is_fraction() const noexcept { return is_fraction_; }
  std::size_t count_value() const noexcept { return count_; }
  double fraction_value() const noexcept { return fraction_; }

  /// Number of rules kept out of `total`; never more than `total`.
  std::size_t resolve(std::size_t total) const;
  std::string to_string() const;

  friend bool operator==(const TopK&, const TopK&) = default;

 private:
  bool is_fraction_ = true;
  std::size_t count_ = 0;
  double fraction_ = 1.0;
};

/// Positions into `rules`, best first: measure value descending under the
/// MeasureValue order, ties by mining index ascending.
std::vector<std::size_t> rank(std::span<const AssociationRule> rules, MeasureId m,
                              std::size_t n_records);

/// Same ordering from values already evaluated (values[i] belongs to rules[i]).
std::vector<std::size_t> rank_by_values(std::span<const AssociationRule> rules,
                                        std::span<const MeasureValue> values);

/// The first k rules of the rank order, in rank order.
std::vector<AssociationRule> top_k(std::span<const AssociationRule> rules, MeasureId m, TopK k,
                                   std::size_t n_records);

}  // namespace rulelab
