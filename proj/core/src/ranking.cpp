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

#include "rulelab/ranking.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rulelab/error.hpp"

namespace rulelab {

TopK TopK::count(std::size_t k) {
  if (k == 0) throw ConfigError("top-k count must be positive");
  TopK t;
  t.is_fraction_ = false;
  t.count_ = k;
  return t;
}

TopK TopK::fraction(double f) {
  if (!(f > 0.0 && f <= 1.0)) throw ConfigError("top-k fraction must lie in (0, 1]");
  TopK t;
  t.is_fraction_ = true;
  t.fraction_ = f;
  return t;
}

namespace {
double parse_double(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ConfigError("cannot parse number '" + std::string(text) + "'");
  }
  return v;
}
}  // namespace

TopK TopK::parse(std::string_view text) {
  if (text.empty()) throw ConfigError("empty top-k value");
  if (text.back() == '%') return fraction(parse_double(text.substr(0, text.size() - 1)) / 100.0);
  if (text.find_first_of(".eE") != std::string_view::npos) return fraction(parse_double(text));
  std::size_t k = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), k);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ConfigError("cannot parse top-k value '" + std::string(text) + "'");
  }
  return count(k);
}

std::size_t TopK::resolve(std::size_t total) const {
  if (!is_fraction_) return std::min(count_, total);
  const double raw = fraction_ * static_cast<double>(total);
  const double k = std::ceil(raw - 1e-9 * std::max(1.0, raw));
  return std::min(total, static_cast<std::size_t>(std::max(0.0, k)));
}

std::string TopK::to_string() const {
  if (!is_fraction_) return std::to_string(count_);
  std::ostringstream os;
  os << fraction_ * 100.0 << '%';
  return os.str();
}

std::vector<std::size_t> rank_by_values(std::span<const AssociationRule> rules,
                                        std::span<const MeasureValue> values) {
  if (rules.size() != values.size()) throw ConfigError("one measure value per rule required");
  std::vector<std::size_t> order(rules.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (const auto c = values[a] <=> values[b]; c != 0) return c > 0;
    if (rules[a].index != rules[b].index) return rules[a].index < rules[b].index;
    return a < b;
  });
  return order;
}

std::vector<std::size_t> rank(std::span<const AssociationRule> rules, MeasureId m,
                              std::size_t n_records) {
  const auto values = evaluate_all(rules, m, n_records);
  return rank_by_values(rules, values);
}

std::vector<AssociationRule> top_k(std::span<const AssociationRule> rules, MeasureId m, TopK k,
                                   std::size_t n_records) {
  const auto order = rank(rules, m, n_records);
  const std::size_t keep = k.resolve(rules.size());
  std::vector<AssociationRule> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) out.push_back(rules[order[i]]);
  return out;
}

}  // namespace rulelab
