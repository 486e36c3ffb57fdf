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

#include "agreeable/covering_design.h"

#include <algorithm>
#include <limits>

#include "agreeable/errors.h"

namespace agreeable {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t ceiling) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > ceiling) return ceiling + 1;
  }
  return static_cast<std::uint64_t>(r);
}

CoveringDesign::CoveringDesign(int num_items, int part_size, int parts_per_block)
    : num_items_(num_items), part_size_(part_size), parts_per_block_(parts_per_block) {
  if (part_size < 1 || parts_per_block < 1) {
    throw InvalidArgument("covering design needs p >= 1 and q >= 1");
  }
  if (static_cast<long long>(part_size) * parts_per_block > num_items) {
    throw InvalidArgument("covering design needs p*q <= m (p=" + std::to_string(part_size) +
                          ", q=" + std::to_string(parts_per_block) +
                          ", m=" + std::to_string(num_items) + ")");
  }
  for (int start = 0; start < num_items; start += part_size) {
    std::vector<int> members;
    for (int x = start; x < std::min(num_items, start + part_size); ++x) members.push_back(x);
    parts_.push_back(ItemSet::from_members(num_items, std::move(members)));
  }
  num_blocks_ = binomial_capped(parts_.size(), parts_per_block,
                                std::numeric_limits<std::uint64_t>::max() - 1);
}

ItemSet CoveringDesign::block(std::span<const int> part_indices) const {
  std::vector<bool> member(num_items_, false);
  int size = 0;
  for (int part : part_indices) {
    for (int x : parts_.at(part).members()) {
      if (!member[x]) {
        member[x] = true;
        ++size;
      }
    }
  }
  for (int x = 0; x < num_items_ && size < block_size(); ++x) {
    if (!member[x]) {
      member[x] = true;
      ++size;
    }
  }
  std::vector<int> members;
  members.reserve(size);
  for (int x = 0; x < num_items_; ++x) {
    if (member[x]) members.push_back(x);
  }
  return ItemSet::from_members(num_items_, std::move(members));
}

std::int64_t CoveringDesign::for_each_block(
    const std::function<bool(const ItemSet&)>& visit) const {
  const int total = static_cast<int>(parts_.size());
  const int q = parts_per_block_;
  std::vector<int> combo(q);
  for (int i = 0; i < q; ++i) combo[i] = i;
  std::int64_t index = 0;
  while (true) {
    if (visit(block(combo))) return index;
    ++index;
    int i = q - 1;
    while (i >= 0 && combo[i] == total - q + i) --i;
    if (i < 0) return -1;
    ++combo[i];
    for (int t = i + 1; t < q; ++t) combo[t] = combo[t - 1] + 1;
  }
}

std::vector<ItemSet> CoveringDesign::blocks() const {
  std::vector<ItemSet> out;
  for_each_block([&](const ItemSet& b) {
    out.push_back(b);
    return false;
  });
  return out;
}

CoveringDesign build_covering_design(int m, int p, int q, std::uint64_t max_blocks) {
  CoveringDesign design(m, p, q);
  if (design.num_blocks() > max_blocks) {
    throw CapExceeded("covering design would have more than " +
                      std::to_string(max_blocks) + " blocks");
  }
  return design;
}

}  // namespace agreeable
