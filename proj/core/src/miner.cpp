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

#include "rulelab/miner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "rulelab/error.hpp"

namespace rulelab {

namespace {

// Thresholds come in as decimal fractions; 0.3 * 10 evaluates to
// 3.0000000000000004 and must still mean 3.
constexpr double kThresholdSlack = 1e-9;

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept {
    std::size_t h = s.size();
    for (ItemId id : s) h ^= std::hash<ItemId>{}(id) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

bool size_then_lex_less(const Itemset& a, const Itemset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct Level {
  std::vector<Itemset> itemsets;
  std::vector<RecordBitmap> bitmaps;
};

// Runs body(i) for i in [0, n) over `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || n < 256) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n));
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
}

}  // namespace

void MiningConfig::validate() const {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw ConfigError("min_support must lie in (0, 1]");
  }
  if (!(min_confidence > 0.0 && min_confidence <= 1.0)) {
    throw ConfigError("min_confidence must lie in (0, 1]");
  }
}

std::size_t min_support_count(double min_support, std::size_t n_records) {
  const double raw = min_support * static_cast<double>(n_records);
  const double count = std::ceil(raw - kThresholdSlack * std::max(1.0, raw));
  return std::max<std::size_t>(1, static_cast<std::size_t>(count));
}

bool meets_confidence(std::size_t n_xy, std::size_t n_x, double min_confidence) {
  if (n_x == 0) return false;
  const double needed = min_confidence * static_cast<double>(n_x);
  return static_cast<double>(n_xy) >= needed - kThresholdSlack * std::max(1.0, needed);
}

std::vector<FrequentItemset> frequent_itemsets(const Dataset& d, double min_support,
                                               unsigned threads) {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw ConfigError("min_support must lie in (0, 1]");
  }
  const std::size_t n = d.n_records();
  const std::size_t min_count = min_support_count(min_support, n);
  const ItemCatalog& catalog = d.catalog();

  std::vector<FrequentItemset> out;
  Level level;
  for (ItemId id = 0; id < catalog.item_count(); ++id) {
    const TidSet& tids = d.tidset_of_item(id);
    if (tids.size() < min_count) continue;
    level.itemsets.push_back({id});
    level.bitmaps.emplace_back(n, tids);
    out.push_back({{id}, tids});
  }

  while (level.itemsets.size() > 1) {
    std::unordered_set<Itemset, ItemsetHash> known(level.itemsets.begin(), level.itemsets.end());

    // Join itemsets sharing all but the last item; level lists are lex sorted
    // so joinable partners are contiguous.
    struct Candidate {
      Itemset items;
      std::size_t left;
      std::size_t right;
    };
    std::vector<Candidate> candidates;
    const std::size_t k = level.itemsets.front().size();
    for (std::size_t i = 0; i < level.itemsets.size(); ++i) {
      const Itemset& a = level.itemsets[i];
      for (std::size_t j = i + 1; j < level.itemsets.size(); ++j) {
        const Itemset& b = level.itemsets[j];
        if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;
        if (catalog.item(a.back()).attribute == catalog.item(b.back()).attribute) continue;
        Itemset joined = a;
        joined.push_back(b.back());
        bool all_subsets_frequent = true;
        if (k >= 2) {
          Itemset sub(k);
          for (std::size_t drop = 0; drop + 2 < joined.size() && all_subsets_frequent; ++drop) {
            std::size_t w = 0;
            for (std::size_t t = 0; t < joined.size(); ++t) {
              if (t != drop) sub[w++] = joined[t];
            }
            all_subsets_frequent = known.contains(sub);
          }
        }
        if (all_subsets_frequent) candidates.push_back({std::move(joined), i, j});
      }
    }

    std::vector<std::size_t> counts(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t c) {
      counts[c] = level.bitmaps[candidates[c].left].intersection_count(
          level.bitmaps[candidates[c].right]);
    });

    Level next;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (counts[c] < min_count) continue;
      RecordBitmap bits = level.bitmaps[candidates[c].left] & level.bitmaps[candidates[c].right];
      out.push_back({candidates[c].items, bits.to_tidset()});
      next.itemsets.push_back(std::move(candidates[c].items));
      next.bitmaps.push_back(std::move(bits));
    }
    level = std::move(next);
  }
  return out;
}

std::vector<AssociationRule> generate_rules(std::span<const FrequentItemset> frequents,
                                            const Dataset& d, double min_confidence) {
  if (!(min_confidence > 0.0 && min_confidence <= 1.0)) {
    throw ConfigError("min_confidence must lie in (0, 1]");
  }
  std::unordered_map<Itemset, const TidSet*, ItemsetHash> covers;
  for (const auto& f : frequents) covers.emplace(f.items, &f.cover);

  // Subsets of frequent itemsets are frequent, so lookups normally hit; a
  // partial list falls back to intersecting item tidsets.
  std::unordered_map<Itemset, TidSet, ItemsetHash> computed;
  const auto cover_of = [&](const Itemset& s) -> const TidSet& {
    if (auto it = covers.find(s); it != covers.end()) return *it->second;
    if (auto it = computed.find(s); it != computed.end()) return it->second;
    TidSet acc = d.tidset_of_item(s.front());
    for (std::size_t i = 1; i < s.size(); ++i) acc = intersect(acc, d.tidset_of_item(s[i]));
    return computed.emplace(s, std::move(acc)).first->second;
  };

  std::vector<AssociationRule> rules;
  for (const auto& z : frequents) {
    const std::size_t k = z.items.size();
    if (k < 2) continue;
    if (k > 30) throw DataError("frequent itemset of size " + std::to_string(k) +
                                " is too large to enumerate rule splits");
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      Itemset x, y;
      for (std::size_t b = 0; b < k; ++b) {
        ((mask >> b) & 1u ? x : y).push_back(z.items[b]);
      }
      const TidSet& cx = cover_of(x);
      if (!meets_confidence(z.cover.size(), cx.size(), min_confidence)) continue;
      AssociationRule r;
      r.antecedent = std::move(x);
      r.consequent = std::move(y);
      r.cover_x = cx;
      r.cover_y = cover_of(r.consequent);
      r.cover_xy = z.cover;
      rules.push_back(std::move(r));
    }
  }

  std::vector<Itemset> unions(rules.size());
  std::vector<std::size_t> order(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) {
    order[i] = i;
    Itemset u = rules[i].antecedent;
    u.insert(u.end(), rules[i].consequent.begin(), rules[i].consequent.end());
    std::sort(u.begin(), u.end());
    unions[i] = std::move(u);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const AssociationRule& ra = rules[a];
    const AssociationRule& rb = rules[b];
    if (int c = compare_confidence(ra, rb); c != 0) return c > 0;
    if (ra.support_count() != rb.support_count()) return ra.support_count() > rb.support_count();
    if (unions[a] != unions[b]) return size_then_lex_less(unions[a], unions[b]);
    return size_then_lex_less(ra.consequent, rb.consequent);
  });

  std::vector<AssociationRule> sorted;
  sorted.reserve(rules.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    sorted.push_back(std::move(rules[order[pos]]));
    sorted.back().index = pos + 1;
  }
  return sorted;
}

RuleStats rule_stats(const AssociationRule& r, std::size_t n_records) {
  if (r.cover_x.empty()) {
    throw std::logic_error("rule " + std::to_string(r.index) + " has an empty antecedent cover");
  }
  if (n_records == 0) throw std::logic_error("rule statistics need a non-empty dataset");
  return {static_cast<double>(r.cover_xy.size()) / static_cast<double>(n_records),
          static_cast<double>(r.cover_xy.size()) / static_cast<double>(r.cover_x.size())};
}

RuleSet mine(const Dataset& d, const MiningConfig& config, unsigned threads) {
  config.validate();
  const auto frequents = frequent_itemsets(d, config.min_support, threads);
  RuleSet out;
  out.catalog = d.catalog();
  out.n_records = d.n_records();
  out.config = config;
  out.rules = generate_rules(frequents, d, config.min_confidence);
  return out;
}

int rounded_percent(std::size_t numerator, std::size_t denominator) {
  if (denominator == 0) throw std::invalid_argument("percentage of an empty total");
  return static_cast<int>((200 * numerator + denominator) / (2 * denominator));
}

std::string format_itemset(const ItemCatalog& catalog, const Itemset& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += " ^ ";
    out += catalog.label(items[i]);
  }
  return out;
}

namespace {
std::string format_cover(const TidSet& t) {
  std::ostringstream os;
  os << t.size() << '(';
  bool first = true;
  for (RecordId id : t) {
    if (!first) os << ',';
    os << id;
    first = false;
  }
  os << ')';
  return os.str();
}
}  // namespace

std::string format_rule(const ItemCatalog& catalog, const AssociationRule& r,
                        std::size_t n_records) {
  std::ostringstream os;
  os << format_itemset(catalog, r.antecedent) << ' ' << format_cover(r.cover_x) << " ==> "
     << format_itemset(catalog, r.consequent) << ' ' << format_cover(r.cover_xy)
     << " sup:(" << rounded_percent(r.cover_xy.size(), n_records) << "%) conf:("
     << rounded_percent(r.cover_xy.size(), r.cover_x.size()) << "%)";
  return os.str();
}

int compare_confidence(const AssociationRule& a, const AssociationRule& b) noexcept {
  const auto lhs = static_cast<std::uint64_t>(a.cover_xy.size()) * b.cover_x.size();
  const auto rhs = static_cast<std::uint64_t>(b.cover_xy.size()) * a.cover_x.size();
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace rulelab
