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
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "rulelab/miner.hpp"
#include "rulelab/tidset.hpp"

namespace rulelab {

enum class ClusterMode : std::uint8_t {
  /// One cluster per consequent item; a rule with a j-item consequent joins j
  /// clusters.
  by_item,
  /// One cluster per distinct consequent itemset.
  by_exact_consequent,
};

std::string_view cluster_mode_name(ClusterMode mode) noexcept;
std::optional<ClusterMode> parse_cluster_mode(std::string_view text);

/// Rules sharing a consequent key, with the union of their covers.
struct Cluster {
  /// A single item under by_item, the full consequent under by_exact_consequent.
  Itemset key;
  /// Positions into the rule list the cluster was built from, ascending.
  std::vector<std::size_t> members;
  TidSet cover;
};

/// Clusters ordered by key (size, then item ids).
std::vector<Cluster> cluster_rules(std::span<const AssociationRule> rules, ClusterMode mode);

/// Union of the members' cover_xy.
TidSet cluster_cover(const Cluster& c, std::span<const AssociationRule> rules);

/// Fraction of the cluster cover below which the greedy loop stops, kept as
/// an integer number of parts per billion so comparisons against counts are
/// exact.
class CoverThreshold {
 public:
  static constexpr std::uint64_t kScale = 1'000'000'000;

  CoverThreshold() = default;
  /// Throws ConfigError unless 0 <= fraction < 1.
  explicit CoverThreshold(double fraction);

  double fraction() const noexcept { return static_cast<double>(ppb_) / kScale; }
  /// count > fraction * total, evaluated exactly.
  bool exceeds(std::size_t count, std::size_t total) const noexcept;

  friend bool operator==(const CoverThreshold&, const CoverThreshold&) = default;

 private:
  std::uint64_t ppb_ = 20'000'000;
};

struct Selection {
  /// Mining index of the chosen rule.
  std::size_t rule_index = 0;
  /// Records newly covered when the rule was chosen.
  std::size_t gain = 0;

  friend bool operator==(const Selection&, const Selection&) = default;
};

enum class CoverExit : std::uint8_t {
  /// Uncovered remainder fell to the threshold.
  cluster_covered,
  /// The best remaining rule's residual cover was at or below the threshold.
  candidates_exhausted,
};

struct RepresentativeSet {
  std::vector<Selection> selections;
  std::size_t residual_uncovered = 0;
  /// |C_y| at the start of the loop.
  std::size_t cluster_size = 0;
  CoverExit exit = CoverExit::cluster_covered;

  std::vector<std::size_t> rule_indices() const;
  friend bool operator==(const RepresentativeSet&, const RepresentativeSet&) = default;
};

/// Greedy rule cover over one cluster. Each round takes the member with the
/// largest residual cover (ties: higher confidence, higher support, lower
/// mining index), credits its residual as gain, and removes its full cover
/// from the cluster remainder and from every residual.
RepresentativeSet select_representatives(const Cluster& c, std::span<const AssociationRule> rules,
                                         CoverThreshold threshold = CoverThreshold{});

/// Plain-text per-cluster report: key, member count, |C_y|, representatives
/// with gains, residual count.
void write_cover_report(std::ostream& out, const ItemCatalog& catalog,
                        std::span<const AssociationRule> rules, ClusterMode mode,
                        CoverThreshold threshold);

}  // namespace rulelab
