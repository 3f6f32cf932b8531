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

#include "rulelab/cover.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rulelab/error.hpp"

namespace rulelab {

std::string_view cluster_mode_name(ClusterMode mode) noexcept {
  return mode == ClusterMode::by_item ? "by_item" : "by_exact_consequent";
}

std::optional<ClusterMode> parse_cluster_mode(std::string_view text) {
  if (text == "by_item" || text == "by-item" || text == "item") return ClusterMode::by_item;
  if (text == "by_exact_consequent" || text == "by-exact-consequent" || text == "exact") {
    return ClusterMode::by_exact_consequent;
  }
  return std::nullopt;
}

namespace {
struct KeyLess {
  bool operator()(const Itemset& a, const Itemset& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};
}  // namespace

std::vector<Cluster> cluster_rules(std::span<const AssociationRule> rules, ClusterMode mode) {
  std::map<Itemset, std::vector<std::size_t>, KeyLess> groups;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (mode == ClusterMode::by_item) {
      for (ItemId item : rules[i].consequent) groups[Itemset{item}].push_back(i);
    } else {
      groups[rules[i].consequent].push_back(i);
    }
  }
  std::vector<Cluster> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups) {
    Cluster c;
    c.key = key;
    c.members = std::move(members);
    c.cover = cluster_cover(c, rules);
    out.push_back(std::move(c));
  }
  return out;
}

TidSet cluster_cover(const Cluster& c, std::span<const AssociationRule> rules) {
  TidSet acc;
  for (std::size_t m : c.members) acc = unite(acc, rules[m].cover_xy);
  return acc;
}

CoverThreshold::CoverThreshold(double fraction) {
  if (!(fraction >= 0.0 && fraction < 1.0)) {
    throw ConfigError("cover threshold must lie in [0, 1)");
  }
  ppb_ = static_cast<std::uint64_t>(std::llround(fraction * static_cast<double>(kScale)));
}

bool CoverThreshold::exceeds(std::size_t count, std::size_t total) const noexcept {
  return static_cast<std::uint64_t>(count) * kScale > ppb_ * static_cast<std::uint64_t>(total);
}

std::vector<std::size_t> RepresentativeSet::rule_indices() const {
  std::vector<std::size_t> out;
  out.reserve(selections.size());
  for (const auto& s : selections) out.push_back(s.rule_index);
  return out;
}

RepresentativeSet select_representatives(const Cluster& c, std::span<const AssociationRule> rules,
                                         CoverThreshold threshold) {
  if (c.members.empty()) throw ConfigError("cannot select representatives of an empty cluster");
  for (std::size_t m : c.members) {
    if (m >= rules.size()) throw ConfigError("cluster member outside the rule list");
  }

  TidSet remaining = cluster_cover(c, rules);
  const std::size_t total = remaining.size();
  std::vector<TidSet> residual;
  residual.reserve(c.members.size());
  for (std::size_t m : c.members) residual.push_back(rules[m].cover_xy);

  // True when member slot a should be preferred over slot b.
  const auto better = [&](std::size_t a, std::size_t b) {
    if (residual[a].size() != residual[b].size()) return residual[a].size() > residual[b].size();
    const AssociationRule& ra = rules[c.members[a]];
    const AssociationRule& rb = rules[c.members[b]];
    if (int cmp = compare_confidence(ra, rb); cmp != 0) return cmp > 0;
    if (ra.support_count() != rb.support_count()) return ra.support_count() > rb.support_count();
    return ra.index < rb.index;
  };

  RepresentativeSet out;
  out.cluster_size = total;
  out.exit = CoverExit::cluster_covered;
  while (threshold.exceeds(remaining.size(), total)) {
    std::size_t best = 0;
    for (std::size_t s = 1; s < residual.size(); ++s) {
      if (better(s, best)) best = s;
    }
    if (!threshold.exceeds(residual[best].size(), total)) {
      out.exit = CoverExit::candidates_exhausted;
      break;
    }
    const AssociationRule& chosen = rules[c.members[best]];
    out.selections.push_back({chosen.index, residual[best].size()});
    remaining = subtract(remaining, chosen.cover_xy);
    for (auto& r : residual) r = subtract(r, chosen.cover_xy);
  }
  out.residual_uncovered = remaining.size();
  return out;
}

void write_cover_report(std::ostream& out, const ItemCatalog& catalog,
                        std::span<const AssociationRule> rules, ClusterMode mode,
                        CoverThreshold threshold) {
  const auto clusters = cluster_rules(rules, mode);
  out << "# mode=" << cluster_mode_name(mode) << " threshold=" << threshold.fraction()
      << " rules=" << rules.size() << " clusters=" << clusters.size() << '\n';

  std::map<std::size_t, const AssociationRule*> by_index;
  for (const auto& r : rules) by_index.emplace(r.index, &r);

  for (const auto& c : clusters) {
    const RepresentativeSet reps = select_representatives(c, rules, threshold);
    out << '[' << format_itemset(catalog, c.key) << "] members=" << c.members.size()
        << " cover=" << c.cover.size() << " representatives=" << reps.selections.size()
        << " residual=" << reps.residual_uncovered << '\n';
    for (const auto& s : reps.selections) {
      const AssociationRule& r = *by_index.at(s.rule_index);
      out << "  R" << s.rule_index << " +" << s.gain << "  "
          << format_itemset(catalog, r.antecedent) << " ==> "
          << format_itemset(catalog, r.consequent) << '\n';
    }
  }
}

}  // namespace rulelab
