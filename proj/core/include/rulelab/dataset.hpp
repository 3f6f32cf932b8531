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
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rulelab/tidset.hpp"

namespace rulelab {

/// Dense item number: items of attribute 0 come first, then attribute 1, and
/// so on, each block in value-catalog order.
using ItemId = std::uint32_t;

/// An attribute=value pair addressed by catalog position.
struct Item {
  std::uint32_t attribute = 0;
  std::uint32_t value = 0;

  friend auto operator<=>(const Item&, const Item&) = default;
};

/// Attribute names plus per-attribute value labels. Shared by datasets and
/// rule files so rules can be rendered and re-read without the records.
class ItemCatalog {
 public:
  ItemCatalog() = default;
  ItemCatalog(std::vector<std::string> attribute_names,
              std::vector<std::vector<std::string>> value_labels);

  std::size_t attribute_count() const noexcept { return attribute_names_.size(); }
  std::size_t item_count() const noexcept { return items_.size(); }

  std::span<const std::string> attribute_names() const noexcept { return attribute_names_; }
  std::span<const std::string> values_of(std::size_t attribute) const {
    return value_labels_.at(attribute);
  }

  bool contains(const Item& item) const noexcept;
  /// Throws ConfigError for items outside the catalog.
  ItemId id_of(const Item& item) const;
  const Item& item(ItemId id) const { return items_.at(id); }
  /// "attribute=value"
  std::string label(ItemId id) const;
  std::optional<ItemId> find_label(std::string_view label) const;

  friend bool operator==(const ItemCatalog& a, const ItemCatalog& b) {
    return a.attribute_names_ == b.attribute_names_ && a.value_labels_ == b.value_labels_;
  }

 private:
  std::vector<std::string> attribute_names_;
  std::vector<std::vector<std::string>> value_labels_;
  std::vector<ItemId> offsets_;
  std::vector<Item> items_;
};

/// One row: a value index per attribute, or nothing where the cell was missing.
using Record = std::vector<std::optional<std::uint32_t>>;

struct IngestConfig {
  char delimiter = ',';
  std::string missing_token = "?";
  bool has_header = true;
};

/// Encoded nominal table. Immutable once built.
class Dataset {
 public:
  Dataset() = default;
  /// Validates that every record has one slot per attribute and that each
  /// present value index exists in the catalog.
  Dataset(ItemCatalog catalog, std::vector<Record> records);

  const ItemCatalog& catalog() const noexcept { return catalog_; }
  std::span<const Record> records() const noexcept { return records_; }
  std::size_t n_records() const noexcept { return records_.size(); }
  std::size_t attribute_count() const noexcept { return catalog_.attribute_count(); }

  /// Every attribute=value pair in (attribute, value) order.
  std::vector<Item> item_catalog() const;

  const TidSet& tidset_of_item(const Item& item) const;
  const TidSet& tidset_of_item(ItemId id) const { return tidsets_.at(id); }

  /// Items of a 1-based record, ascending.
  std::vector<ItemId> record_items(RecordId id) const;

 private:
  ItemCatalog catalog_;
  std::vector<Record> records_;
  std::vector<TidSet> tidsets_;
};

Dataset load_table(std::istream& in, const IngestConfig& config = {});
/// Writes a header row followed by one row per record; missing cells get the
/// missing token.
void write_table(std::ostream& out, const Dataset& d, const IngestConfig& config = {});

/// Debug listing: item id, "attr=value", tidset cardinality.
void dump_items(std::ostream& out, const Dataset& d);

struct SyntheticShape {
  std::size_t n_records = 2680;
  std::size_t n_attributes = 71;
  std::size_t min_values = 2;
  std::size_t max_values = 4;
};

/// Seeded nominal table with correlated, skewed value distributions.
Dataset generate_synthetic(const SyntheticShape& shape, std::uint64_t seed);

}  // namespace rulelab
