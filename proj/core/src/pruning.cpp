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

#include "rulelab/pruning.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "rulelab/error.hpp"

namespace rulelab {

namespace {

bool key_less(const Itemset& a, const Itemset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

template <typename Clusters>
const ClusterRepresentatives* find_key(const Clusters& clusters, const Itemset& key) {
  const auto it = std::lower_bound(
      clusters.begin(), clusters.end(), key,
      [](const ClusterRepresentatives& c, const Itemset& k) { return key_less(c.key, k); });
  return (it != clusters.end() && it->key == key) ? &*it : nullptr;
}

std::vector<ClusterRepresentatives> representatives_of(std::span<const AssociationRule> rules,
                                                       ClusterMode mode,
                                                       CoverThreshold threshold) {
  std::vector<ClusterRepresentatives> out;
  for (const Cluster& c : cluster_rules(rules, mode)) {
    out.push_back({c.key, c.members.size(), select_representatives(c, rules, threshold)});
  }
  return out;
}

void sum_totals(ComparisonRow& row) {
  row.total_cluster = 0;
  row.total_common = 0;
  for (const auto& c : row.clusters) {
    row.total_cluster += c.cluster_count;
    row.total_common += c.common_count;
  }
}

}  // namespace

const ClusterRepresentatives* BaselineResult::find(const Itemset& key) const noexcept {
  return find_key(clusters, key);
}

const ClusterRepresentatives* PrunedResult::find(const Itemset& key) const noexcept {
  return find_key(clusters, key);
}

BaselineResult baseline_representatives(std::span<const AssociationRule> rules, ClusterMode mode,
                                        CoverThreshold threshold) {
  if (rules.empty()) throw DataError("cannot build baseline representatives from zero rules");
  BaselineResult out;
  out.mode = mode;
  out.threshold = threshold;
  out.clusters = representatives_of(rules, mode, threshold);
  return out;
}

PrunedResult pruned_representatives(std::span<const AssociationRule> rules, MeasureId m, TopK k,
                                    ClusterMode mode, CoverThreshold threshold,
                                    std::size_t n_records) {
  const auto kept = top_k(rules, m, k, n_records);
  PrunedResult out;
  out.measure = m;
  out.k = k;
  out.kept_rules = kept.size();
  out.mode = mode;
  out.threshold = threshold;
  out.clusters = representatives_of(kept, mode, threshold);
  return out;
}

ComparisonRow compare(const BaselineResult& baseline, const PrunedResult& pruned) {
  if (baseline.mode != pruned.mode) throw ConfigError("baseline and pruned cluster modes differ");
  if (baseline.threshold != pruned.threshold) {
    throw ConfigError("baseline and pruned cover thresholds differ");
  }
  ComparisonRow row;
  row.measure = pruned.measure;
  for (const auto& b : baseline.clusters) {
    ClusterComparison cmp{b.key, 0, 0};
    if (const auto* p = pruned.find(b.key)) {
      const auto mine = p->representatives.rule_indices();
      const auto theirs = b.representatives.rule_indices();
      const std::set<std::size_t> base(theirs.begin(), theirs.end());
      cmp.cluster_count = mine.size();
      cmp.common_count = static_cast<std::size_t>(
          std::count_if(mine.begin(), mine.end(), [&](std::size_t i) { return base.contains(i); }));
    }
    row.clusters.push_back(std::move(cmp));
  }
  for (const auto& p : pruned.clusters) {
    if (baseline.find(p.key)) continue;
    row.clusters.push_back({p.key, p.representatives.selections.size(), 0});
  }
  sum_totals(row);
  return row;
}

ComparisonRow baseline_row(const BaselineResult& baseline) {
  ComparisonRow row;
  for (const auto& b : baseline.clusters) {
    const std::size_t n = b.representatives.selections.size();
    row.clusters.push_back({b.key, n, n});
  }
  sum_totals(row);
  return row;
}

std::vector<Itemset> ExperimentReport::column_keys() const {
  std::vector<Itemset> keys;
  for (const auto& c : baseline.clusters) keys.push_back(c.key);
  std::vector<Itemset> extra;
  for (const auto& row : rows) {
    for (const auto& c : row.clusters) {
      if (!baseline.find(c.key)) extra.push_back(c.key);
    }
  }
  std::sort(extra.begin(), extra.end(), key_less);
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  keys.insert(keys.end(), extra.begin(), extra.end());
  return keys;
}

ExperimentReport run_experiment(const Dataset& d, const ExperimentConfig& config) {
  RuleSet rules = mine(d, config.mining, std::max(1u, config.threads));
  if (rules.rules.empty()) {
    std::ostringstream msg;
    msg << "mining produced no rules at min_support=" << config.mining.min_support
        << " min_confidence=" << config.mining.min_confidence;
    throw DataError(msg.str());
  }
  return run_experiment(rules, config);
}

ExperimentReport run_experiment(const RuleSet& rules, const ExperimentConfig& config) {
  if (rules.rules.empty()) throw DataError("rule set is empty");
  if (config.measures.empty()) throw ConfigError("experiment needs at least one measure");

  ExperimentReport report;
  report.config = config;
  report.config.mining = rules.config;
  report.catalog = rules.catalog;
  report.n_records = rules.n_records;
  report.rule_count = rules.rules.size();
  report.baseline = baseline_representatives(rules.rules, config.mode, config.threshold);
  report.all_rules = baseline_row(report.baseline);

  report.rows.resize(config.measures.size());
  const auto work = [&](std::size_t i) {
    const PrunedResult pruned =
        pruned_representatives(rules.rules, config.measures[i], config.top, config.mode,
                               config.threshold, rules.n_records);
    report.rows[i] = compare(report.baseline, pruned);
  };

  const std::size_t n = config.measures.size();
  const unsigned workers = std::min<unsigned>(std::max(1u, config.threads), static_cast<unsigned>(n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic_flag failed = ATOMIC_FLAG_INIT;
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
              work(i);
            } catch (...) {
              if (!failed.test_and_set()) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return report;
}

}  // namespace rulelab
