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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rulelab/miner.hpp"

namespace rulelab {

/// Joint counts of a rule X -> Y over n records.
struct ContingencyTable {
  std::uint64_t n = 0;
  std::uint64_t n_x = 0;
  std::uint64_t n_y = 0;
  std::uint64_t n_xy = 0;

  /// Throws ConfigError unless 0 <= n_xy <= min(n_x, n_y), n_x, n_y <= n and
  /// n_x + n_y - n_xy <= n.
  static ContingencyTable make(std::uint64_t n, std::uint64_t n_x, std::uint64_t n_y,
                               std::uint64_t n_xy);

  std::uint64_t n_x_not_y() const noexcept { return n_x - n_xy; }
  std::uint64_t n_not_x_y() const noexcept { return n_y - n_xy; }
  std::uint64_t n_not_x_not_y() const noexcept { return n - n_x - n_y + n_xy; }

  friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;
};

ContingencyTable contingency(const AssociationRule& r, std::size_t n_records);

enum class MeasureId : std::uint8_t {
  support,
  confidence,
  coverage,
  prevalence,
  recall,
  specificity_1,
  accuracy,
  lift,
  leverage_1,
  added_value,
  relative_risk,
  jaccard,
  certainty_factor,
  odds_ratio,
  yule_q,
  yule_y,
  klosgen,
  conviction,
  collective_strength,
  laplace_correction,
  gini_index,
  phi_coefficient,
  j_measure,
  piatetsky_shapiro,
  cosine,
  loevinger,
  information_gain,
  sebag_schoenauer,
  least_contradiction,
  odd_multiplier,
  example_counterexample_rate,
  zhang,
  correlation,
  leverage_2,
  coherence,
  specificity_2,
  all_confidence,
  max_confidence,
  kulczynski,
};

inline constexpr std::size_t kMeasureCount = 39;

/// Every measure in catalog order.
std::span<const MeasureId> all_measures() noexcept;
std::string_view measure_name(MeasureId m) noexcept;
/// Accepts the snake_case name; case and '-' versus '_' are ignored.
std::optional<MeasureId> parse_measure(std::string_view name);

/// A measure result on the extended real line, plus "undefined" for 0/0.
/// Ranking order: +inf > finite > -inf > undefined.
class MeasureValue {
 public:
  enum class Kind : std::uint8_t { undefined, negative_infinite, finite, positive_infinite };

  MeasureValue() = default;

  static MeasureValue finite(double v);
  static MeasureValue positive_infinite() noexcept { return MeasureValue(Kind::positive_infinite, 0); }
  static MeasureValue negative_infinite() noexcept { return MeasureValue(Kind::negative_infinite, 0); }
  static MeasureValue undefined() noexcept { return MeasureValue(Kind::undefined, 0); }
  /// NaN maps to undefined, +-inf to the infinities.
  static MeasureValue from_double(double v) noexcept;

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  /// The finite value, +-infinity, or NaN for undefined.
  double as_double() const noexcept;

  /// "+inf", "-inf", "nan", or the shortest round-trip decimal.
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const MeasureValue& a, const MeasureValue& b) noexcept;
  friend bool operator==(const MeasureValue& a, const MeasureValue& b) noexcept {
    return (a <=> b) == 0;
  }

 private:
  MeasureValue(Kind k, double v) noexcept : kind_(k), value_(v) {}

  Kind kind_ = Kind::undefined;
  double value_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const MeasureValue& v);

MeasureValue evaluate(MeasureId m, const ContingencyTable& t);

std::vector<MeasureValue> evaluate_all(std::span<const AssociationRule> rules, MeasureId m,
                                       std::size_t n_records);

/// One row per rule: mining index, then every measure in catalog order.
void write_measures_csv(std::ostream& out, std::span<const AssociationRule> rules,
                        std::size_t n_records, std::span<const MeasureId> measures);

}  // namespace rulelab
