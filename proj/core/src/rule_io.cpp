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

#include "rulelab/rule_io.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "json.hpp"
#include "rulelab/error.hpp"

namespace rulelab {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "rulelab-rules";
constexpr int kVersion = 1;

json itemset_json(const ItemCatalog& catalog, const Itemset& items) {
  json arr = json::array();
  for (ItemId id : items) arr.push_back(catalog.label(id));
  return arr;
}

json tidset_json(const TidSet& t) {
  json arr = json::array();
  for (RecordId id : t) arr.push_back(id);
  return arr;
}

Itemset parse_itemset(const ItemCatalog& catalog, const json& arr, std::size_t line_no) {
  Itemset out;
  for (const auto& v : arr) {
    const auto label = v.get<std::string>();
    const auto id = catalog.find_label(label);
    if (!id) {
      throw DataError("line " + std::to_string(line_no) + ": unknown item '" + label + "'");
    }
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw DataError("line " + std::to_string(line_no) + ": repeated item in itemset");
  }
  return out;
}

TidSet parse_tidset(const json& arr, std::size_t n_records, std::size_t line_no) {
  std::vector<RecordId> ids = arr.get<std::vector<RecordId>>();
  for (RecordId id : ids) {
    if (id == 0 || id > n_records) {
      throw DataError("line " + std::to_string(line_no) + ": record id " + std::to_string(id) +
                      " outside 1.." + std::to_string(n_records));
    }
  }
  return TidSet::from_unsorted(std::move(ids));
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

}  // namespace

void write_rules(std::ostream& out, const RuleSet& rules) {
  json attributes = json::array();
  for (std::size_t a = 0; a < rules.catalog.attribute_count(); ++a) {
    const auto values = rules.catalog.values_of(a);
    attributes.push_back({{"name", rules.catalog.attribute_names()[a]},
                          {"values", std::vector<std::string>(values.begin(), values.end())}});
  }
  const json header = {{"format", kFormat},
                       {"version", kVersion},
                       {"n_records", rules.n_records},
                       {"min_support", rules.config.min_support},
                       {"min_confidence", rules.config.min_confidence},
                       {"rule_count", rules.rules.size()},
                       {"attributes", attributes}};
  out << header.dump() << '\n';

  for (const auto& r : rules.rules) {
    const RuleStats stats = rule_stats(r, rules.n_records);
    const json line = {{"index", r.index},
                       {"antecedent", itemset_json(rules.catalog, r.antecedent)},
                       {"consequent", itemset_json(rules.catalog, r.consequent)},
                       {"cover_x", tidset_json(r.cover_x)},
                       {"cover_y", tidset_json(r.cover_y)},
                       {"cover_xy", tidset_json(r.cover_xy)},
                       {"support", stats.support},
                       {"confidence", stats.confidence}};
    out << line.dump() << '\n';
  }
}

RuleSet read_rules(std::istream& in) {
  RuleSet out;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t expected_rules = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }

    try {
      if (!have_header) {
        if (obj.value("format", "") != kFormat) {
          throw DataError("line " + std::to_string(line_no) + ": not a rulelab rule file");
        }
        if (obj.at("version").get<int>() != kVersion) {
          throw DataError("unsupported rule file version");
        }
        std::vector<std::string> names;
        std::vector<std::vector<std::string>> values;
        for (const auto& a : obj.at("attributes")) {
          names.push_back(a.at("name").get<std::string>());
          values.push_back(a.at("values").get<std::vector<std::string>>());
        }
        out.catalog = ItemCatalog(std::move(names), std::move(values));
        out.n_records = obj.at("n_records").get<std::size_t>();
        out.config.min_support = obj.at("min_support").get<double>();
        out.config.min_confidence = obj.at("min_confidence").get<double>();
        expected_rules = obj.at("rule_count").get<std::size_t>();
        have_header = true;
        continue;
      }

      AssociationRule r;
      r.index = obj.at("index").get<std::size_t>();
      r.antecedent = parse_itemset(out.catalog, obj.at("antecedent"), line_no);
      r.consequent = parse_itemset(out.catalog, obj.at("consequent"), line_no);
      r.cover_x = parse_tidset(obj.at("cover_x"), out.n_records, line_no);
      r.cover_y = parse_tidset(obj.at("cover_y"), out.n_records, line_no);
      r.cover_xy = parse_tidset(obj.at("cover_xy"), out.n_records, line_no);

      if (r.antecedent.empty() || r.consequent.empty()) {
        throw DataError("line " + std::to_string(line_no) + ": empty antecedent or consequent");
      }
      if (!r.cover_xy.is_subset_of(r.cover_x) || !r.cover_xy.is_subset_of(r.cover_y) ||
          r.cover_x.empty()) {
        throw DataError("line " + std::to_string(line_no) + ": inconsistent covers");
      }
      const RuleStats stats = rule_stats(r, out.n_records);
      if (!close(stats.support, obj.at("support").get<double>()) ||
          !close(stats.confidence, obj.at("confidence").get<double>())) {
        throw DataError("line " + std::to_string(line_no) +
                        ": support/confidence disagree with covers");
      }
      out.rules.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  if (!have_header) throw DataError("empty rule file");
  if (out.rules.size() != expected_rules) {
    throw DataError("rule file declares " + std::to_string(expected_rules) + " rules but holds " +
                    std::to_string(out.rules.size()));
  }
  return out;
}

}  // namespace rulelab
