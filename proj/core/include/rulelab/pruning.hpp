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
#include <optional>
#include <span>
#include <vector>

#include "rulelab/cover.hpp"
#include "rulelab/dataset.hpp"
#include "rulelab/measures.hpp"
#include "rulelab/miner.hpp"
#include "rulelab/ranking.hpp"

namespace rulelab {

struct ClusterRepresentatives {
  Itemset key;
  std::size_t member_count = 0;
  RepresentativeSet representatives;
};

/// Representatives of every cluster of the complete rule set ("All-ARs").
struct BaselineResult {
  ClusterMode mode = ClusterMode::by_item;
  CoverThreshold threshold;
  std::vector<ClusterRepresentatives> clusters;

  const ClusterRepresentatives* find(const Itemset& key) const noexcept;
};

/// Representatives re-derived from the top-k rules of one measure.
struct PrunedResult {
  MeasureId measure = MeasureId::support;
  TopK k;
  std::size_t kept_rules = 0;
  ClusterMode mode = ClusterMode::by_item;
  CoverThreshold threshold;
  std::vector<ClusterRepresentatives> clusters;

  const ClusterRepresentatives* find(const Itemset& key) const noexcept;
};

struct ClusterComparison {
  Itemset key;
  /// Representatives found from the pruned rules.
  std::size_t cluster_count = 0;
  /// How many of those are also baseline representatives (same mining index).
  std::size_t common_count = 0;

  friend bool operator==(const ClusterComparison&, const ClusterComparison&) = default;
};

/// Cluster/Common counts for one measure. `measure` is empty for the
/// baseline's own row.
struct ComparisonRow {
  std::optional<MeasureId> measure;
  std::vector<ClusterComparison> clusters;
  std::size_t total_cluster = 0;
  std::size_t total_common = 0;

  /// Equal per-cluster counts and totals, ignoring which measure produced them.
  bool same_counts(const ComparisonRow& other) const noexcept {
    return clusters == other.clusters && total_cluster == other.total_cluster &&
           total_common == other.total_common;
  }
};

/// Throws DataError for an empty rule list.
BaselineResult baseline_representatives(std::span<const AssociationRule> rules, ClusterMode mode,
                                        CoverThreshold threshold);

PrunedResult pruned_representatives(std::span<const AssociationRule> rules, MeasureId m, TopK k,
                                    ClusterMode mode, CoverThreshold threshold,
                                    std::size_t n_records);

/// Per baseline key in baseline order, then keys only the pruned run produced
/// (common = 0). Throws ConfigError when mode or threshold differ.
ComparisonRow compare(const BaselineResult& baseline, const PrunedResult& pruned);

/// The baseline compared with itself: cluster = common = its own counts.
ComparisonRow baseline_row(const BaselineResult& baseline);

struct ExperimentConfig {
  MiningConfig mining;
  std::vector<MeasureId> measures{all_measures().begin(), all_measures().end()};
  TopK top = TopK::fraction(0.21);
  ClusterMode mode = ClusterMode::by_item;
  CoverThreshold threshold;
  /// Recorded in the report when the data came from the synthetic generator.
  std::optional<std::uint64_t> seed;
  /// Workers for per-measure rows; results do not depend on it.
  unsigned threads = 1;
};

struct ExperimentReport {
  ExperimentConfig config;
  ItemCatalog catalog;
  std::size_t n_records = 0;
  std::size_t rule_count = 0;
  BaselineResult baseline;
  ComparisonRow all_rules;
  /// One row per requested measure, in request order.
  std::vector<ComparisonRow> rows;

  /// Column keys for tabular output: baseline keys, then any key that only
  /// pruned runs produced, in key order.
  std::vector<Itemset> column_keys() const;
};

/// Mines once, builds the baseline once, then one row per measure. Throws
/// DataError when mining yields no rules.
ExperimentReport run_experiment(const Dataset& d, const ExperimentConfig& config);

/// Same experiment over an already-mined rule set; config.mining is replaced
/// by the rule set's own thresholds.
ExperimentReport run_experiment(const RuleSet& rules, const ExperimentConfig& config);

}  // namespace rulelab
