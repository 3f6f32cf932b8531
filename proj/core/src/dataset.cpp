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

#include "rulelab/dataset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "csv.hpp"
#include "rulelab/error.hpp"

namespace rulelab {

ItemCatalog::ItemCatalog(std::vector<std::string> attribute_names,
                         std::vector<std::vector<std::string>> value_labels)
    : attribute_names_(std::move(attribute_names)), value_labels_(std::move(value_labels)) {
  if (attribute_names_.size() != value_labels_.size()) {
    throw ConfigError("catalog needs one value list per attribute");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : attribute_names_) {
    if (!seen.insert(name).second) throw DataError("duplicate attribute name '" + name + "'");
  }
  ItemId next = 0;
  offsets_.reserve(attribute_names_.size());
  for (std::uint32_t a = 0; a < value_labels_.size(); ++a) {
    offsets_.push_back(next);
    std::unordered_set<std::string> values;
    for (std::uint32_t v = 0; v < value_labels_[a].size(); ++v) {
      if (!values.insert(value_labels_[a][v]).second) {
        throw DataError("duplicate value '" + value_labels_[a][v] + "' for attribute '" +
                        attribute_names_[a] + "'");
      }
      items_.push_back(Item{a, v});
      ++next;
    }
  }
}

bool ItemCatalog::contains(const Item& item) const noexcept {
  return item.attribute < value_labels_.size() &&
         item.value < value_labels_[item.attribute].size();
}

ItemId ItemCatalog::id_of(const Item& item) const {
  if (!contains(item)) {
    throw ConfigError("item (" + std::to_string(item.attribute) + "," +
                      std::to_string(item.value) + ") is not in the catalog");
  }
  return offsets_[item.attribute] + item.value;
}

std::string ItemCatalog::label(ItemId id) const {
  const Item& it = items_.at(id);
  return attribute_names_[it.attribute] + "=" + value_labels_[it.attribute][it.value];
}

std::optional<ItemId> ItemCatalog::find_label(std::string_view text) const {
  // Attribute names may themselves contain '=', so try every split point.
  for (std::size_t pos = text.find('='); pos != std::string_view::npos;
       pos = text.find('=', pos + 1)) {
    const std::string_view name = text.substr(0, pos);
    const std::string_view value = text.substr(pos + 1);
    for (std::uint32_t a = 0; a < attribute_names_.size(); ++a) {
      if (attribute_names_[a] != name) continue;
      const auto& labels = value_labels_[a];
      const auto found = std::find(labels.begin(), labels.end(), value);
      if (found != labels.end()) {
        return offsets_[a] + static_cast<ItemId>(found - labels.begin());
      }
    }
  }
  return std::nullopt;
}

Dataset::Dataset(ItemCatalog catalog, std::vector<Record> records)
    : catalog_(std::move(catalog)), records_(std::move(records)) {
  std::vector<std::vector<RecordId>> ids(catalog_.item_count());
  for (std::size_t r = 0; r < records_.size(); ++r) {
    const Record& rec = records_[r];
    if (rec.size() != catalog_.attribute_count()) {
      throw DataError("record " + std::to_string(r + 1) + " has " + std::to_string(rec.size()) +
                      " slots, expected " + std::to_string(catalog_.attribute_count()));
    }
    for (std::uint32_t a = 0; a < rec.size(); ++a) {
      if (!rec[a]) continue;
      const Item it{a, *rec[a]};
      if (!catalog_.contains(it)) {
        throw DataError("record " + std::to_string(r + 1) + " references unknown value index " +
                        std::to_string(*rec[a]) + " of attribute '" +
                        catalog_.attribute_names()[a] + "'");
      }
      ids[catalog_.id_of(it)].push_back(static_cast<RecordId>(r + 1));
    }
  }
  tidsets_.reserve(ids.size());
  for (auto& v : ids) tidsets_.push_back(TidSet::from_unsorted(std::move(v)));
}

std::vector<Item> Dataset::item_catalog() const {
  std::vector<Item> out;
  out.reserve(catalog_.item_count());
  for (ItemId id = 0; id < catalog_.item_count(); ++id) out.push_back(catalog_.item(id));
  return out;
}

const TidSet& Dataset::tidset_of_item(const Item& item) const {
  return tidsets_[catalog_.id_of(item)];
}

std::vector<ItemId> Dataset::record_items(RecordId id) const {
  const Record& rec = records_.at(id - 1);
  std::vector<ItemId> out;
  for (std::uint32_t a = 0; a < rec.size(); ++a) {
    if (rec[a]) out.push_back(catalog_.id_of(Item{a, *rec[a]}));
  }
  return out;
}

Dataset load_table(std::istream& in, const IngestConfig& config) {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> values;
  std::vector<std::unordered_map<std::string, std::uint32_t>> index;
  std::vector<Record> records;

  std::string line;
  std::size_t line_no = 0;
  bool saw_any_line = false;
  bool have_schema = false;
  std::size_t width = 0;

  const auto set_schema = [&](std::vector<std::string> header) {
    width = header.size();
    names = std::move(header);
    values.assign(width, {});
    index.assign(width, {});
    have_schema = true;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    saw_any_line = true;
    auto fields = detail::split_csv_line(line, config.delimiter, line_no);
    if (!have_schema) {
      if (config.has_header) {
        set_schema(std::move(fields));
        continue;
      }
      std::vector<std::string> generated;
      for (std::size_t a = 0; a < fields.size(); ++a) {
        generated.push_back("attr" + std::to_string(a + 1));
      }
      set_schema(std::move(generated));
    }
    if (fields.size() != width) {
      throw DataError("line " + std::to_string(line_no) + " (data row " +
                      std::to_string(records.size() + 1) + "): expected " +
                      std::to_string(width) + " fields, got " + std::to_string(fields.size()));
    }
    Record rec(width);
    for (std::size_t a = 0; a < width; ++a) {
      if (fields[a] == config.missing_token) continue;
      auto [it, inserted] =
          index[a].try_emplace(fields[a], static_cast<std::uint32_t>(values[a].size()));
      if (inserted) values[a].push_back(fields[a]);
      rec[a] = it->second;
    }
    records.push_back(std::move(rec));
  }

  if (!saw_any_line) throw DataError("empty input");
  if (records.empty()) throw DataError("no data rows");
  return Dataset(ItemCatalog(std::move(names), std::move(values)), std::move(records));
}

void write_table(std::ostream& out, const Dataset& d, const IngestConfig& config) {
  const ItemCatalog& cat = d.catalog();
  const auto names = cat.attribute_names();
  for (std::size_t a = 0; a < names.size(); ++a) {
    if (a) out << config.delimiter;
    detail::write_csv_field(out, names[a], config.delimiter);
  }
  out << '\n';
  for (const Record& rec : d.records()) {
    for (std::size_t a = 0; a < rec.size(); ++a) {
      if (a) out << config.delimiter;
      if (rec[a]) {
        detail::write_csv_field(out, cat.values_of(a)[*rec[a]], config.delimiter);
      } else {
        out << config.missing_token;
      }
    }
    out << '\n';
  }
}

void dump_items(std::ostream& out, const Dataset& d) {
  for (ItemId id = 0; id < d.catalog().item_count(); ++id) {
    out << id << '\t' << d.catalog().label(id) << '\t' << d.tidset_of_item(id).size() << '\n';
  }
}

}  // namespace rulelab
