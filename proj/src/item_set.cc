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

#include "agreeable/item_set.h"

#include <algorithm>
#include <sstream>

#include "agreeable/errors.h"

namespace agreeable {

ItemSet::ItemSet(int universe) : universe_(universe) {
  if (universe < 0) throw InvalidArgument("negative universe size");
}

ItemSet ItemSet::from_members(int universe, std::vector<int> members) {
  ItemSet set(universe);
  std::sort(members.begin(), members.end());
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= universe) {
      throw InvalidArgument("item " + std::to_string(members[i] + 1) +
                            " outside 1.." + std::to_string(universe));
    }
    if (i > 0 && members[i] == members[i - 1]) {
      throw InvalidArgument("item " + std::to_string(members[i] + 1) +
                            " listed twice");
    }
  }
  set.members_ = std::move(members);
  return set;
}

ItemSet ItemSet::from_external(int universe, std::span<const int> one_based) {
  std::vector<int> members;
  members.reserve(one_based.size());
  for (int x : one_based) members.push_back(x - 1);
  return from_members(universe, std::move(members));
}

ItemSet ItemSet::full(int universe) {
  ItemSet set(universe);
  set.members_.resize(universe);
  for (int i = 0; i < universe; ++i) set.members_[i] = i;
  return set;
}

ItemSet ItemSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw InvalidArgument("bit mask limited to 64 items");
  ItemSet set(universe);
  for (int i = 0; i < universe; ++i) {
    if (mask >> i & 1) set.members_.push_back(i);
  }
  if (universe < 64 && (mask >> universe) != 0) {
    throw InvalidArgument("mask has bits outside the universe");
  }
  return set;
}

bool ItemSet::contains(int item) const {
  return std::binary_search(members_.begin(), members_.end(), item);
}

bool ItemSet::is_subset_of(const ItemSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

ItemSet ItemSet::complement() const {
  ItemSet out(universe_);
  out.members_.reserve(universe_ - members_.size());
  size_t next = 0;
  for (int i = 0; i < universe_; ++i) {
    if (next < members_.size() && members_[next] == i) {
      ++next;
    } else {
      out.members_.push_back(i);
    }
  }
  return out;
}

ItemSet ItemSet::with(int item) const {
  if (item < 0 || item >= universe_) {
    throw InvalidArgument("item outside the universe");
  }
  ItemSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), item);
  if (it == out.members_.end() || *it != item) out.members_.insert(it, item);
  return out;
}

std::vector<int> ItemSet::external() const {
  std::vector<int> out(members_.begin(), members_.end());
  for (int& x : out) ++x;
  return out;
}

std::string ItemSet::to_string() const {
  std::string out;
  for (int x : members_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x + 1);
  }
  return out;
}

ItemSet parse_item_set(int universe, const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> items;
  std::string token;
  while (in >> token) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw ParseError("item set: '" + token + "' is not an item index");
    }
    items.push_back(value);
  }
  return ItemSet::from_external(universe, items);
}

}  // namespace agreeable
