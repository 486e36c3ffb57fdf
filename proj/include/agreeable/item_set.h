// Copyright 2026 The Agreeable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AGREEABLE_ITEM_SET_H_
#define AGREEABLE_ITEM_SET_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace agreeable {

// A subset of the items {0, ..., universe-1}. Members are kept sorted and
// duplicate-free. Externally (files, CLI, CSV) items are numbered from 1;
// the conversion happens only in from_external() / external().
class ItemSet {
 public:
  ItemSet() = default;
  explicit ItemSet(int universe);

  // Throws InvalidArgument on out-of-range or repeated members.
  static ItemSet from_members(int universe, std::vector<int> members);
  static ItemSet from_external(int universe, std::span<const int> one_based);
  static ItemSet full(int universe);
  // Bit i of mask set <=> item i is a member. Requires universe <= 64.
  static ItemSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  std::span<const int> members() const { return members_; }

  bool contains(int item) const;
  bool is_subset_of(const ItemSet& other) const;
  ItemSet complement() const;
  ItemSet with(int item) const;

  std::vector<int> external() const;
  // Space-separated 1-based indices; empty string for the empty set.
  std::string to_string() const;

  friend bool operator==(const ItemSet&, const ItemSet&) = default;
  // Lexicographic on the sorted member lists (universe compared first).
  friend std::strong_ordering operator<=>(const ItemSet&, const ItemSet&) = default;

 private:
  int universe_ = 0;
  std::vector<int> members_;
};

// Parses "1 3 4" (spaces and/or commas) into a set over `universe`.
ItemSet parse_item_set(int universe, const std::string& text);

}  // namespace agreeable

#endif  // AGREEABLE_ITEM_SET_H_
