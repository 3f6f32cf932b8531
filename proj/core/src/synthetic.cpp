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

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include "rulelab/dataset.hpp"
#include "rulelab/error.hpp"

namespace rulelab {

namespace {

// std::mt19937_64 output is fixed by the standard; the std distributions are
// not, so draws are derived from raw engine output here.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % b);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % b);
  }

  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  std::size_t categorical(const std::vector<double>& cdf) {
    const double u = unit() * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<double> zipf_cdf(std::size_t k, double exponent) {
  std::vector<double> cdf(k);
  double acc = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    acc += 1.0 / std::pow(static_cast<double>(r + 1), exponent);
    cdf[r] = acc;
  }
  return cdf;
}

// The most frequent value takes `dominant` of the mass; the rest decays
// geometrically by `ratio`.
std::vector<double> dominant_cdf(std::size_t k, double dominant, double ratio) {
  if (k == 1) return {1.0};
  std::vector<double> weights(k);
  weights[0] = dominant;
  double tail = 0.0;
  for (std::size_t r = 1; r < k; ++r) {
    weights[r] = 1.0 / std::pow(1.0 + ratio, static_cast<double>(r - 1));
    tail += weights[r];
  }
  std::vector<double> cdf(k);
  double acc = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    acc += r == 0 ? dominant : (1.0 - dominant) * weights[r] / tail;
    cdf[r] = acc;
  }
  return cdf;
}

constexpr double kNearConstantShare = 0.12;
constexpr double kLinkedShare = 0.35;

// Latent respondent profiles; a share of attributes reorders its values per
// profile, which is what makes confident rules appear between attributes.
constexpr std::size_t kProfiles = 3;

struct AttributeModel {
  std::size_t cardinality = 1;
  std::vector<double> cdf;
  bool profile_linked = false;
  std::array<std::size_t, kProfiles> shift{};
};

std::string attribute_name(std::size_t a, std::size_t total) {
  const std::size_t width = std::to_string(total).size();
  std::string digits = std::to_string(a + 1);
  return "Q" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

Dataset generate_synthetic(const SyntheticShape& shape, std::uint64_t seed) {
  if (shape.n_records == 0) throw ConfigError("synthetic dataset needs at least one record");
  if (shape.n_attributes == 0) throw ConfigError("synthetic dataset needs at least one attribute");
  if (shape.min_values == 0 || shape.min_values > shape.max_values) {
    throw ConfigError("values per attribute must satisfy 1 <= min <= max");
  }

  Draw draw(seed);

  const std::vector<double> profile_cdf = zipf_cdf(kProfiles, 0.8);

  std::vector<AttributeModel> models(shape.n_attributes);
  for (auto& m : models) {
    m.cardinality = draw.between(shape.min_values, shape.max_values);
    const bool near_constant = draw.unit() < kNearConstantShare;
    const double dominant = near_constant ? 0.80 + 0.13 * draw.unit() : 0.30 + 0.40 * draw.unit();
    m.cdf = dominant_cdf(m.cardinality, dominant, 1.0 + draw.unit());
    m.profile_linked = draw.unit() < kLinkedShare;
    for (std::size_t p = 0; p < kProfiles; ++p) {
      m.shift[p] = (m.profile_linked && p > 0) ? draw.below(m.cardinality) : 0;
    }
  }

  // Raw value indices; relabelled below so catalogs follow first occurrence,
  // matching what load_table builds from the written CSV.
  std::vector<std::vector<std::size_t>> raw(shape.n_records,
                                            std::vector<std::size_t>(shape.n_attributes));
  for (auto& row : raw) {
    const std::size_t profile = draw.categorical(profile_cdf);
    for (std::size_t a = 0; a < shape.n_attributes; ++a) {
      const AttributeModel& m = models[a];
      const std::size_t rank = draw.categorical(m.cdf);
      row[a] = (rank + m.shift[profile]) % m.cardinality;
    }
  }

  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels(shape.n_attributes);
  std::vector<std::vector<std::optional<std::uint32_t>>> remap(shape.n_attributes);
  for (std::size_t a = 0; a < shape.n_attributes; ++a) {
    names.push_back(attribute_name(a, shape.n_attributes));
    remap[a].assign(models[a].cardinality, std::nullopt);
  }

  std::vector<Record> records;
  records.reserve(shape.n_records);
  for (const auto& row : raw) {
    Record rec(shape.n_attributes);
    for (std::size_t a = 0; a < shape.n_attributes; ++a) {
      auto& slot = remap[a][row[a]];
      if (!slot) {
        slot = static_cast<std::uint32_t>(labels[a].size());
        labels[a].push_back("v" + std::to_string(row[a] + 1));
      }
      rec[a] = *slot;
    }
    records.push_back(std::move(rec));
  }

  return Dataset(ItemCatalog(std::move(names), std::move(labels)), std::move(records));
}

}  // namespace rulelab
