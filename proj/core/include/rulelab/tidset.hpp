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
#include <initializer_list>
#include <span>
#include <vector>

namespace rulelab {

/// 1-based record number, as shown in every external surface.
using RecordId = std::uint32_t;

/// Strictly increasing set of 1-based record ids (the records covered by an
/// itemset or a rule).
class TidSet {
 public:
  TidSet() = default;
  TidSet(std::initializer_list<RecordId> ids);

  /// Takes ids in any order; duplicates are collapsed. Id 0 is rejected.
  static TidSet from_unsorted(std::vector<RecordId> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  std::span<const RecordId> ids() const noexcept { return ids_; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  bool contains(RecordId id) const noexcept;
  bool is_subset_of(const TidSet& other) const noexcept;

  friend TidSet unite(const TidSet& a, const TidSet& b);
  friend TidSet intersect(const TidSet& a, const TidSet& b);
  friend TidSet subtract(const TidSet& a, const TidSet& b);

  friend bool operator==(const TidSet&, const TidSet&) = default;

 private:
  std::vector<RecordId> ids_;
};

TidSet unite(const TidSet& a, const TidSet& b);
TidSet intersect(const TidSet& a, const TidSet& b);
TidSet subtract(const TidSet& a, const TidSet& b);

/// Dense bit-per-record view used on the mining hot path. Bit i stands for
/// record id i + 1.
class RecordBitmap {
 public:
  RecordBitmap() = default;
  explicit RecordBitmap(std::size_t n_records);
  RecordBitmap(std::size_t n_records, const TidSet& ids);

  std::size_t n_records() const noexcept { return n_records_; }
  std::size_t count() const noexcept;
  void set(RecordId id) noexcept;
  bool test(RecordId id) const noexcept;

  /// In-place intersection; both bitmaps must have the same record count.
  RecordBitmap& operator&=(const RecordBitmap& other) noexcept;
  friend RecordBitmap operator&(RecordBitmap a, const RecordBitmap& b) noexcept {
    a &= b;
    return a;
  }

  /// Popcount of the intersection without materializing it.
  std::size_t intersection_count(const RecordBitmap& other) const noexcept;

  TidSet to_tidset() const;

  friend bool operator==(const RecordBitmap&, const RecordBitmap&) = default;

 private:
  std::size_t n_records_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rulelab
