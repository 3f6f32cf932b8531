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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rulelab/error.hpp"
#include "rulelab/measures.hpp"
#include "rulelab/miner.hpp"

namespace rulelab {
namespace {

constexpr double kRelTol = 1e-12;
constexpr double kOracleTol = 1e-9;

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double value(MeasureId m, const ContingencyTable& t) { return evaluate(m, t).as_double(); }

std::vector<AssociationRule> weather_rules() {
  return mine(testing::load_weather(), {0.2, 0.7}).rules;
}

TEST(Catalog, ThirtyNineNamedMeasuresRoundTrip) {
  ASSERT_EQ(all_measures().size(), kMeasureCount);
  for (MeasureId m : all_measures()) {
    const auto name = measure_name(m);
    EXPECT_EQ(parse_measure(name), m);
  }
  EXPECT_EQ(parse_measure("Information-Gain"), MeasureId::information_gain);
  EXPECT_EQ(parse_measure("YULE_Q"), MeasureId::yule_q);
  EXPECT_FALSE(parse_measure("gain").has_value());
}

TEST(Contingency, WeatherRuleCounts) {
  const auto rules = weather_rules();
  const ContingencyTable r1 = contingency(rules[0], 14);
  EXPECT_EQ(r1.n, 14u);
  EXPECT_EQ(r1.n_x, 4u);
  EXPECT_EQ(r1.n_y, 9u);
  EXPECT_EQ(r1.n_xy, 4u);
  const ContingencyTable r9 = contingency(rules[8], 14);
  EXPECT_EQ(r9.n_x, 7u);
  EXPECT_EQ(r9.n_y, 9u);
  EXPECT_EQ(r9.n_xy, 6u);
  EXPECT_EQ(r9.n_x_not_y() + r9.n_not_x_y() + r9.n_not_x_not_y() + r9.n_xy, 14u);
}

TEST(Contingency, DegenerateAndInvalidTables) {
  const ContingencyTable full = ContingencyTable::make(5, 5, 5, 5);
  EXPECT_EQ(full.n_x_not_y(), 0u);
  EXPECT_EQ(full.n_not_x_y(), 0u);
  EXPECT_EQ(full.n_not_x_not_y(), 0u);
  EXPECT_THROW(ContingencyTable::make(5, 6, 1, 1), ConfigError);
  EXPECT_THROW(ContingencyTable::make(5, 2, 2, 3), ConfigError);
  EXPECT_THROW(ContingencyTable::make(5, 4, 4, 2), ConfigError);
}

TEST(Evaluate, WorkedValues) {
  const auto rules = weather_rules();
  const ContingencyTable r1 = contingency(rules[0], 14);
  const ContingencyTable r9 = contingency(rules[8], 14);
  EXPECT_TRUE(close(value(MeasureId::lift, r1), 14.0 / 9.0, kRelTol));
  EXPECT_EQ(evaluate(MeasureId::conviction, r1), MeasureValue::positive_infinite());
  EXPECT_TRUE(close(value(MeasureId::accuracy, r1), 9.0 / 14.0, kRelTol));
  EXPECT_EQ(value(MeasureId::odds_ratio, r9), 8.0);
  EXPECT_TRUE(close(value(MeasureId::support, r9), 6.0 / 14.0, kRelTol));
  EXPECT_EQ(value(MeasureId::laplace_correction, r9), 7.0 / 9.0);
}

TEST(Evaluate, DivisionConventions) {
  // n_x = 0: confidence is 0/0.
  const ContingencyTable empty_x = ContingencyTable::make(10, 0, 4, 0);
  EXPECT_EQ(evaluate(MeasureId::confidence, empty_x).kind(), MeasureValue::Kind::undefined);
  // Perfect rule: Sebag a/0 = +inf, ECR 1 - 0/a = 1.
  const ContingencyTable perfect = ContingencyTable::make(10, 3, 5, 3);
  EXPECT_EQ(evaluate(MeasureId::sebag_schoenauer, perfect), MeasureValue::positive_infinite());
  EXPECT_EQ(value(MeasureId::example_counterexample_rate, perfect), 1.0);
  // Negative numerator over zero: zhang with a = 0 and n_y = n.
  const ContingencyTable never = ContingencyTable::make(10, 0, 10, 0);
  EXPECT_EQ(evaluate(MeasureId::certainty_factor, never).kind(), MeasureValue::Kind::undefined);
  const ContingencyTable against = ContingencyTable::make(10, 4, 6, 0);
  EXPECT_EQ(evaluate(MeasureId::odds_ratio, against).as_double(), 0.0);
  EXPECT_EQ(evaluate(MeasureId::information_gain, against),
            MeasureValue::negative_infinite());
  // Collective strength is undefined when every record agrees.
  const ContingencyTable agree = ContingencyTable::make(10, 4, 4, 4);
  EXPECT_EQ(evaluate(MeasureId::collective_strength, agree).kind(),
            MeasureValue::Kind::undefined);
  // J-measure: zero-probability terms contribute nothing.
  EXPECT_TRUE(evaluate(MeasureId::j_measure, perfect).is_finite());
}

TEST(Evaluate, AllRulesAgreeWithLiteralFormulas) {
  const auto rules = weather_rules();
  for (const auto& r : rules) {
    const ContingencyTable t = contingency(r, 14);
    for (MeasureId m : all_measures()) {
      const auto expected = testing::literal_measure(m, t);
      if (!expected) continue;
      EXPECT_TRUE(close(value(m, t), static_cast<double>(*expected), kOracleTol))
          << measure_name(m) << " on R" << r.index << ": " << value(m, t) << " vs "
          << static_cast<double>(*expected);
    }
  }
}

TEST(Evaluate, RandomTablesAgreeWithLiteralFormulas) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const ContingencyTable t = testing::random_table(rng);
    for (MeasureId m : all_measures()) {
      const MeasureValue v = evaluate(m, t);
      const auto expected = testing::literal_measure(m, t);
      if (!expected) continue;
      ASSERT_TRUE(v.is_finite()) << measure_name(m) << " n=" << t.n << " nx=" << t.n_x
                                 << " ny=" << t.n_y << " nxy=" << t.n_xy;
      ASSERT_TRUE(close(v.as_double(), static_cast<double>(*expected), kOracleTol))
          << measure_name(m) << " n=" << t.n << " nx=" << t.n_x << " ny=" << t.n_y
          << " nxy=" << t.n_xy << ": " << v.as_double() << " vs "
          << static_cast<double>(*expected);
    }
  }
}

void check_identities(const ContingencyTable& t) {
  const auto v = [&](MeasureId m) { return evaluate(m, t); };
  EXPECT_EQ(v(MeasureId::jaccard), v(MeasureId::coherence));
  EXPECT_EQ(v(MeasureId::piatetsky_shapiro), v(MeasureId::leverage_2));
  const MeasureValue kulc = v(MeasureId::kulczynski);
  if (kulc.is_finite()) {
    const double mean =
        (v(MeasureId::all_confidence).as_double() + v(MeasureId::max_confidence).as_double()) / 2;
    EXPECT_TRUE(close(kulc.as_double(), mean, kRelTol));
  }
  const MeasureValue odds = v(MeasureId::odds_ratio);
  if (odds.is_finite()) {
    const double o = odds.as_double();
    EXPECT_TRUE(close(v(MeasureId::yule_q).as_double(), (o - 1) / (o + 1), kRelTol));
    const double s = std::sqrt(o);
    EXPECT_TRUE(close(v(MeasureId::yule_y).as_double(), (s - 1) / (s + 1), kRelTol));
  }
  const MeasureValue conf = v(MeasureId::confidence);
  if (conf.is_finite() && conf.as_double() > 0) {
    EXPECT_TRUE(close(v(MeasureId::example_counterexample_rate).as_double(),
                      2 - 1 / conf.as_double(), kRelTol));
  }
}

TEST(Identities, HoldOnWeatherRules) {
  for (const auto& r : weather_rules()) check_identities(contingency(r, 14));
}

TEST(Identities, HoldOnTenThousandRandomTables) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10000; ++trial) check_identities(testing::random_table(rng, 500));
}

TEST(Bounds, BoundedMeasuresStayInRange) {
  std::mt19937_64 rng(31);
  const MeasureId unit[] = {
      MeasureId::confidence, MeasureId::support,        MeasureId::coverage,
      MeasureId::prevalence, MeasureId::recall,         MeasureId::specificity_1,
      MeasureId::accuracy,   MeasureId::cosine,         MeasureId::jaccard,
      MeasureId::all_confidence, MeasureId::max_confidence, MeasureId::kulczynski};
  const MeasureId signed_unit[] = {MeasureId::yule_q, MeasureId::yule_y,
                                   MeasureId::phi_coefficient};
  for (int trial = 0; trial < 5000; ++trial) {
    const ContingencyTable t = testing::random_table(rng);
    for (MeasureId m : unit) {
      const MeasureValue v = evaluate(m, t);
      if (!v.is_finite()) continue;
      EXPECT_GE(v.as_double(), 0.0) << measure_name(m);
      EXPECT_LE(v.as_double(), 1.0 + 1e-15) << measure_name(m);
    }
    for (MeasureId m : signed_unit) {
      const MeasureValue v = evaluate(m, t);
      if (!v.is_finite()) continue;
      EXPECT_GE(v.as_double(), -1.0 - 1e-15) << measure_name(m);
      EXPECT_LE(v.as_double(), 1.0 + 1e-15) << measure_name(m);
    }
    for (MeasureId m : all_measures()) {
      const double d = evaluate(m, t).as_double();
      EXPECT_EQ(MeasureValue::from_double(d), evaluate(m, t));
    }
  }
}

TEST(MeasureValueOrder, TotalOrderAcrossKinds) {
  const MeasureValue undef = MeasureValue::undefined();
  const MeasureValue neg = MeasureValue::negative_infinite();
  const MeasureValue lo = MeasureValue::finite(-1e300);
  const MeasureValue hi = MeasureValue::finite(2.5);
  const MeasureValue pos = MeasureValue::positive_infinite();
  EXPECT_LT(undef, neg);
  EXPECT_LT(neg, lo);
  EXPECT_LT(lo, hi);
  EXPECT_LT(hi, pos);
  EXPECT_EQ(undef, MeasureValue::from_double(std::nan("")));
  EXPECT_EQ(MeasureValue::from_double(-0.0), MeasureValue::finite(0.0));
  EXPECT_THROW(MeasureValue::finite(INFINITY), ConfigError);
  EXPECT_EQ(pos.to_string(), "+inf");
  EXPECT_EQ(neg.to_string(), "-inf");
  EXPECT_EQ(undef.to_string(), "nan");
  EXPECT_EQ(MeasureValue::finite(0.1).to_string(), "0.1");
}

TEST(EvaluateAll, PreservesOrder) {
  const auto rules = weather_rules();
  const auto conf = evaluate_all(rules, MeasureId::confidence, 14);
  ASSERT_EQ(conf.size(), 17u);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(conf[i].as_double(), 1.0);
  EXPECT_LT(conf[8].as_double(), 1.0);
  EXPECT_TRUE(evaluate_all({}, MeasureId::lift, 14).empty());
  const std::vector<AssociationRule> same(3, rules[4]);
  const auto v = evaluate_all(same, MeasureId::zhang, 14);
  EXPECT_EQ(v[0], v[1]);
  EXPECT_EQ(v[1], v[2]);
}

TEST(MeasuresCsv, HeaderAndSpecialValues) {
  const auto rules = weather_rules();
  std::ostringstream out;
  const MeasureId picked[] = {MeasureId::confidence, MeasureId::conviction};
  write_measures_csv(out, rules, 14, picked);
  std::istringstream in(out.str());
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "mining_index,confidence,conviction");
  EXPECT_EQ(first, "1,1,+inf");
  std::size_t lines = 2;
  for (std::string l; std::getline(in, l);) ++lines;
  EXPECT_EQ(lines, 18u);
}

}  // namespace
}  // namespace rulelab
