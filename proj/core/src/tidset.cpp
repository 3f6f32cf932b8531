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

#include "rulelab/tidset.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>

namespace rulelab {

TidSet::TidSet(std::initializer_list<RecordId> ids)
    : TidSet(from_unsorted(std::vector<RecordId>(ids))) {}

TidSet TidSet::from_unsorted(std::vector<RecordId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.front() == 0) {
    throw std::invalid_argument("record ids are 1-based; got 0");
  }
  TidSet out;
  out.ids_ = std::move(ids);
  return out;
}

bool TidSet::contains(RecordId id) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool TidSet::is_subset_of(const TidSet& other) const noexcept {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

TidSet unite(const TidSet& a, const TidSet& b) {
  TidSet out;
  out.ids_.reserve(a.size() + b.size());
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

TidSet intersect(const TidSet& a, const TidSet& b) {
  TidSet out;
  out.ids_.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

TidSet subtract(const TidSet& a, const TidSet& b) {
  TidSet out;
  out.ids_.reserve(a.size());
  std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

namespace {
constexpr std::size_t kWordBits = 64;
}

RecordBitmap::RecordBitmap(std::size_t n_records)
    : n_records_(n_records), words_((n_records + kWordBits - 1) / kWordBits, 0) {}

RecordBitmap::RecordBitmap(std::size_t n_records, const TidSet& ids) : RecordBitmap(n_records) {
  for (RecordId id : ids) {
    if (id == 0 || id > n_records) {
      throw std::out_of_range("record id outside bitmap range");
    }
    set(id);
  }
}

std::size_t RecordBitmap::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void RecordBitmap::set(RecordId id) noexcept {
  const std::size_t bit = id - 1;
  words_[bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
}

bool RecordBitmap::test(RecordId id) const noexcept {
  if (id == 0 || id > n_records_) return false;
  const std::size_t bit = id - 1;
  return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1u;
}

RecordBitmap& RecordBitmap::operator&=(const RecordBitmap& other) noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t RecordBitmap::intersection_count(const RecordBitmap& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

TidSet RecordBitmap::to_tidset() const {
  std::vector<RecordId> ids;
  ids.reserve(count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      ids.push_back(static_cast<RecordId>(w * kWordBits + static_cast<std::size_t>(bit) + 1));
      word &= word - 1;
    }
  }
  return TidSet::from_unsorted(std::move(ids));
}

}  // namespace rulelab
