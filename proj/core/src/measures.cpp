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

#include "rulelab/measures.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "rulelab/error.hpp"

namespace rulelab {

ContingencyTable ContingencyTable::make(std::uint64_t n, std::uint64_t n_x, std::uint64_t n_y,
                                        std::uint64_t n_xy) {
  if (n_x > n || n_y > n || n_xy > std::min(n_x, n_y) || n_x + n_y - n_xy > n) {
    throw ConfigError("invalid contingency counts (n=" + std::to_string(n) +
                      ", n_x=" + std::to_string(n_x) + ", n_y=" + std::to_string(n_y) +
                      ", n_xy=" + std::to_string(n_xy) + ")");
  }
  return ContingencyTable{n, n_x, n_y, n_xy};
}

ContingencyTable contingency(const AssociationRule& r, std::size_t n_records) {
  return ContingencyTable::make(n_records, r.cover_x.size(), r.cover_y.size(), r.cover_xy.size());
}

namespace {

constexpr std::array<MeasureId, kMeasureCount> kAll = {
    MeasureId::support,          MeasureId::confidence,
    MeasureId::coverage,         MeasureId::prevalence,
    MeasureId::recall,           MeasureId::specificity_1,
    MeasureId::accuracy,         MeasureId::lift,
    MeasureId::leverage_1,       MeasureId::added_value,
    MeasureId::relative_risk,    MeasureId::jaccard,
    MeasureId::certainty_factor, MeasureId::odds_ratio,
    MeasureId::yule_q,           MeasureId::yule_y,
    MeasureId::klosgen,          MeasureId::conviction,
    MeasureId::collective_strength, MeasureId::laplace_correction,
    MeasureId::gini_index,       MeasureId::phi_coefficient,
    MeasureId::j_measure,        MeasureId::piatetsky_shapiro,
    MeasureId::cosine,           MeasureId::loevinger,
    MeasureId::information_gain, MeasureId::sebag_schoenauer,
    MeasureId::least_contradiction, MeasureId::odd_multiplier,
    MeasureId::example_counterexample_rate, MeasureId::zhang,
    MeasureId::correlation,      MeasureId::leverage_2,
    MeasureId::coherence,        MeasureId::specificity_2,
    MeasureId::all_confidence,   MeasureId::max_confidence,
    MeasureId::kulczynski,
};

constexpr std::array<std::string_view, kMeasureCount> kNames = {
    "support",          "confidence",
    "coverage",         "prevalence",
    "recall",           "specificity_1",
    "accuracy",         "lift",
    "leverage_1",       "added_value",
    "relative_risk",    "jaccard",
    "certainty_factor", "odds_ratio",
    "yule_q",           "yule_y",
    "klosgen",          "conviction",
    "collective_strength", "laplace_correction",
    "gini_index",       "phi_coefficient",
    "j_measure",        "piatetsky_shapiro",
    "cosine",           "loevinger",
    "information_gain", "sebag_schoenauer",
    "least_contradiction", "odd_multiplier",
    "example_counterexample_rate", "zhang",
    "correlation",      "leverage_2",
    "coherence",        "specificity_2",
    "all_confidence",   "max_confidence",
    "kulczynski",
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Division with the measure conventions: positive/0 -> +inf, negative/0 ->
// -inf, 0/0 -> undefined (NaN). Operands are exact integers or values already
// on the extended line.
double ratio(double num, double den) {
  if (std::isnan(num) || std::isnan(den)) return kNaN;
  if (den == 0.0) {
    if (num > 0.0) return kInf;
    if (num < 0.0) return -kInf;
    return kNaN;
  }
  return num / den;
}

double nan_min(double a, double b) { return (std::isnan(a) || std::isnan(b)) ? kNaN : std::min(a, b); }
double nan_max(double a, double b) { return (std::isnan(a) || std::isnan(b)) ? kNaN : std::max(a, b); }

// p * log(r) where p = 0 contributes nothing and an infinite ratio with
// p > 0 is undefined.
double p_log(double p, double r) {
  if (p == 0.0) return 0.0;
  if (std::isnan(r) || std::isinf(r)) return kNaN;
  return p * std::log(r);
}

struct Counts {
  // Signed so differences like n*a - nx*ny stay exact.
  std::int64_t n, nx, ny, a, b, c, d, nnx, nny;

  explicit Counts(const ContingencyTable& t)
      : n(static_cast<std::int64_t>(t.n)),
        nx(static_cast<std::int64_t>(t.n_x)),
        ny(static_cast<std::int64_t>(t.n_y)),
        a(static_cast<std::int64_t>(t.n_xy)),
        b(static_cast<std::int64_t>(t.n_x_not_y())),
        c(static_cast<std::int64_t>(t.n_not_x_y())),
        d(static_cast<std::int64_t>(t.n_not_x_not_y())),
        nnx(n - nx),
        nny(n - ny) {}
};

double as_real(std::int64_t v) { return static_cast<double>(v); }

double lift(const Counts& k) { return ratio(as_real(k.n * k.a), as_real(k.nx * k.ny)); }
double confidence(const Counts& k) { return ratio(as_real(k.a), as_real(k.nx)); }
double recall(const Counts& k) { return ratio(as_real(k.a), as_real(k.ny)); }
double added_value(const Counts& k) { return confidence(k) - ratio(as_real(k.ny), as_real(k.n)); }
double leverage_2(const Counts& k) { return ratio(as_real(k.n * k.a - k.nx * k.ny), as_real(k.n * k.n)); }
double jaccard(const Counts& k) { return ratio(as_real(k.a), as_real(k.nx + k.ny - k.a)); }

double yule_q(const Counts& k) {
  return ratio(as_real(k.a * k.d - k.b * k.c), as_real(k.a * k.d + k.b * k.c));
}

// (sqrt(ad) - sqrt(bc)) / (sqrt(ad) + sqrt(bc)) rewritten through Q so that
// tables with equal odds ratios give bit-identical values and the ranking
// matches Yule's Q exactly.
double yule_y(const Counts& k) {
  const double q = yule_q(k);
  if (std::isnan(q)) return q;
  return q / (1.0 + std::sqrt((1.0 - q) * (1.0 + q)));
}

double gini_index(const Counts& k) {
  const double px = ratio(as_real(k.nx), as_real(k.n));
  const double pnx = ratio(as_real(k.nnx), as_real(k.n));
  const double y_x = ratio(as_real(k.a), as_real(k.nx));
  const double ny_x = ratio(as_real(k.b), as_real(k.nx));
  const double y_nx = ratio(as_real(k.c), as_real(k.nnx));
  const double ny_nx = ratio(as_real(k.d), as_real(k.nnx));
  const double py = ratio(as_real(k.ny), as_real(k.n));
  const double pny = ratio(as_real(k.nny), as_real(k.n));
  return px * (y_x * y_x + ny_x * ny_x) + pnx * (y_nx * y_nx + ny_nx * ny_nx) - py * py -
         pny * pny;
}

double collective_strength(const Counts& k) {
  const std::int64_t off_diagonal = k.n - k.a - k.d;
  if (off_diagonal == 0) return kNaN;
  const std::int64_t expected = k.nx * k.ny + k.nnx * k.nny;
  const double agreement = ratio(as_real(k.n * (k.a + k.d)), as_real(expected));
  const double disagreement = ratio(as_real(k.n * k.n - expected), as_real(k.n * off_diagonal));
  return agreement * disagreement;
}

double phi(const Counts& k) {
  return ratio(as_real(k.n * k.a - k.nx * k.ny),
               std::sqrt(as_real(k.nx * k.ny) * as_real(k.nnx * k.nny)));
}

double correlation(const Counts& k) {
  return ratio(as_real(k.n * k.n) * as_real(k.n * k.a - k.nx * k.ny), as_real(k.nx * k.ny) * as_real(k.nnx * k.nny));
}

double j_measure(const Counts& k) {
  const double first = p_log(ratio(as_real(k.a), as_real(k.n)), lift(k));
  const double second =
      p_log(ratio(as_real(k.b), as_real(k.n)), ratio(as_real(k.n * k.b), as_real(k.nx * k.nny)));
  return first + second;
}

double zhang(const Counts& k) {
  return ratio(as_real(k.n * k.a - k.nx * k.ny), as_real(std::max(k.a * k.nny, k.ny * k.b)));
}

double compute(MeasureId m, const Counts& k) {
  switch (m) {
    case MeasureId::support: return ratio(as_real(k.a), as_real(k.n));
    case MeasureId::confidence: return confidence(k);
    case MeasureId::coverage: return ratio(as_real(k.nx), as_real(k.n));
    case MeasureId::prevalence: return ratio(as_real(k.ny), as_real(k.n));
    case MeasureId::recall: return recall(k);
    case MeasureId::specificity_1: return ratio(as_real(k.d), as_real(k.nnx));
    case MeasureId::accuracy: return ratio(as_real(k.a + k.d), as_real(k.n));
    case MeasureId::lift: return lift(k);
    case MeasureId::leverage_1: return confidence(k) - ratio(as_real(k.nx * k.ny), as_real(k.n * k.n));
    case MeasureId::added_value: return added_value(k);
    case MeasureId::relative_risk: return ratio(as_real(k.a * k.nnx), as_real(k.nx * k.c));
    case MeasureId::jaccard: return jaccard(k);
    case MeasureId::certainty_factor:
      return ratio(as_real(k.n * k.a - k.nx * k.ny), as_real(k.nx * k.nny));
    case MeasureId::odds_ratio: return ratio(as_real(k.a * k.d), as_real(k.b * k.c));
    case MeasureId::yule_q: return yule_q(k);
    case MeasureId::yule_y: return yule_y(k);
    case MeasureId::klosgen: return std::sqrt(ratio(as_real(k.a), as_real(k.n))) * added_value(k);
    case MeasureId::conviction: return ratio(as_real(k.nx * k.nny), as_real(k.n * k.b));
    case MeasureId::collective_strength: return collective_strength(k);
    case MeasureId::laplace_correction: return ratio(as_real(k.a + 1), as_real(k.nx + 2));
    case MeasureId::gini_index: return gini_index(k);
    case MeasureId::phi_coefficient: return phi(k);
    case MeasureId::j_measure: return j_measure(k);
    case MeasureId::piatetsky_shapiro: return leverage_2(k);
    case MeasureId::cosine: return ratio(as_real(k.a), std::sqrt(as_real(k.nx * k.ny)));
    case MeasureId::loevinger: return 1.0 - ratio(as_real(k.nx * k.nny), as_real(k.n * k.b));
    case MeasureId::information_gain: {
      const double l = lift(k);
      return std::isnan(l) ? l : std::log(l);
    }
    case MeasureId::sebag_schoenauer: return ratio(as_real(k.a), as_real(k.b));
    case MeasureId::least_contradiction: return ratio(as_real(k.a - k.b), as_real(k.ny));
    case MeasureId::odd_multiplier: return ratio(as_real(k.a * k.nny), as_real(k.ny * k.b));
    case MeasureId::example_counterexample_rate: return 1.0 - ratio(as_real(k.b), as_real(k.a));
    case MeasureId::zhang: return zhang(k);
    case MeasureId::correlation: return correlation(k);
    case MeasureId::leverage_2: return leverage_2(k);
    case MeasureId::coherence: return jaccard(k);
    case MeasureId::specificity_2: return ratio(as_real(k.d), as_real(k.n));
    case MeasureId::all_confidence: return nan_min(recall(k), confidence(k));
    case MeasureId::max_confidence: return nan_max(recall(k), confidence(k));
    case MeasureId::kulczynski: return (recall(k) + confidence(k)) / 2.0;
  }
  return kNaN;
}

}  // namespace

std::span<const MeasureId> all_measures() noexcept { return kAll; }

std::string_view measure_name(MeasureId m) noexcept {
  return kNames[static_cast<std::size_t>(m)];
}

std::optional<MeasureId> parse_measure(std::string_view name) {
  std::string norm;
  norm.reserve(name.size());
  for (char ch : name) {
    norm.push_back(ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == norm) return kAll[i];
  }
  return std::nullopt;
}

MeasureValue MeasureValue::finite(double v) {
  if (!std::isfinite(v)) throw ConfigError("MeasureValue::finite needs a finite value");
  return MeasureValue(Kind::finite, v == 0.0 ? 0.0 : v);
}

MeasureValue MeasureValue::from_double(double v) noexcept {
  if (std::isnan(v)) return undefined();
  if (std::isinf(v)) return v > 0 ? positive_infinite() : negative_infinite();
  return MeasureValue(Kind::finite, v == 0.0 ? 0.0 : v);
}

double MeasureValue::as_double() const noexcept {
  switch (kind_) {
    case Kind::finite: return value_;
    case Kind::positive_infinite: return kInf;
    case Kind::negative_infinite: return -kInf;
    case Kind::undefined: break;
  }
  return kNaN;
}

std::string MeasureValue::to_string() const {
  switch (kind_) {
    case Kind::positive_infinite: return "+inf";
    case Kind::negative_infinite: return "-inf";
    case Kind::undefined: return "nan";
    case Kind::finite: break;
  }
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, res.ptr);
}

std::strong_ordering operator<=>(const MeasureValue& a, const MeasureValue& b) noexcept {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != MeasureValue::Kind::finite) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const MeasureValue& v) { return os << v.to_string(); }

MeasureValue evaluate(MeasureId m, const ContingencyTable& t) {
  return MeasureValue::from_double(compute(m, Counts(t)));
}

std::vector<MeasureValue> evaluate_all(std::span<const AssociationRule> rules, MeasureId m,
                                       std::size_t n_records) {
  std::vector<MeasureValue> out;
  out.reserve(rules.size());
  for (const auto& r : rules) out.push_back(evaluate(m, contingency(r, n_records)));
  return out;
}

void write_measures_csv(std::ostream& out, std::span<const AssociationRule> rules,
                        std::size_t n_records, std::span<const MeasureId> measures) {
  out << "mining_index";
  for (MeasureId m : measures) out << ',' << measure_name(m);
  out << '\n';
  for (const auto& r : rules) {
    const ContingencyTable t = contingency(r, n_records);
    out << r.index;
    for (MeasureId m : measures) out << ',' << evaluate(m, t).to_string();
    out << '\n';
  }
}

}  // namespace rulelab
