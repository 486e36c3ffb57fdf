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

#ifndef AGREEABLE_COVERING_DESIGN_H_
#define AGREEABLE_COVERING_DESIGN_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "agreeable/item_set.h"

namespace agreeable {

// C(n, k), saturating at ceiling + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t ceiling);

// Blocks of size exactly p*q over m items such that every subset of at most q
// items lies inside some block. The items are cut into ceil(m/p) consecutive
// parts of size <= p; each block is the union of q distinct parts, topped up
// with the smallest-index items outside the union when the last (short) part
// is involved. Blocks are enumerated lazily, in lexicographic order of the
// part combinations.
class CoveringDesign {
 public:
  CoveringDesign(int num_items, int part_size, int parts_per_block);

  int num_items() const { return num_items_; }
  int part_size() const { return part_size_; }
  int parts_per_block() const { return parts_per_block_; }
  int block_size() const { return part_size_ * parts_per_block_; }
  const std::vector<ItemSet>& parts() const { return parts_; }
  std::uint64_t num_blocks() const { return num_blocks_; }

  // The block for the given sorted, distinct part indices.
  ItemSet block(std::span<const int> part_indices) const;

  // Visits blocks in order until `visit` returns true. Returns the 0-based
  // index of the block that stopped the walk, or -1.
  std::int64_t for_each_block(const std::function<bool(const ItemSet&)>& visit) const;

  std::vector<ItemSet> blocks() const;

 private:
  int num_items_;
  int part_size_;
  int parts_per_block_;
  std::vector<ItemSet> parts_;
  std::uint64_t num_blocks_;
};

// Throws InvalidArgument unless p, q >= 1 and p*q <= m, and CapExceeded when
// C(ceil(m/p), q) > max_blocks.
CoveringDesign build_covering_design(int m, int p, int q,
                                     std::uint64_t max_blocks = 1'000'000);

}  // namespace agreeable

#endif  // AGREEABLE_COVERING_DESIGN_H_
