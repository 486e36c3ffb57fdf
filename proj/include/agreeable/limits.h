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

#ifndef AGREEABLE_LIMITS_H_
#define AGREEABLE_LIMITS_H_

#include <cstdint>

namespace agreeable {

// Size caps for the exponential and pseudo-polynomial solvers. Exceeding a cap
// raises CapExceeded; nothing is silently truncated.
struct Limits {
  // solve_bruteforce and the other exhaustive searches. Hard maximum 62.
  int max_brute_items = 24;
  // solve_dp: number of agents.
  int max_dp_agents = 4;
  // solve_dp: (m + 1) * prod_i (sigma_i + 1).
  std::uint64_t max_dp_cells = 4'000'000'000ULL;
  // solve_oracle: number of covering-design blocks.
  std::uint64_t max_cover_blocks = 1'000'000;
  // solve_randomized: number of draws before giving up.
  int resample_cap = 64;
  // solve_deterministic: number of agents.
  int max_deterministic_agents = 12;

  // Defaults overridden by AGREEABLE_MAX_BRUTE_ITEMS, AGREEABLE_MAX_DP_AGENTS,
  // AGREEABLE_MAX_DP_CELLS, AGREEABLE_MAX_COVER_BLOCKS,
  // AGREEABLE_RESAMPLE_CAP and AGREEABLE_MAX_DETERMINISTIC_AGENTS.
  // Throws InvalidArgument on a value that is not a positive integer.
  static Limits from_environment();
};

}  // namespace agreeable

#endif  // AGREEABLE_LIMITS_H_
