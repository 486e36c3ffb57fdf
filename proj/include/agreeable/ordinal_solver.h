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

#ifndef AGREEABLE_ORDINAL_SOLVER_H_
#define AGREEABLE_ORDINAL_SOLVER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "agreeable/instance.h"
#include "agreeable/item_set.h"

namespace agreeable {

// max(1, ln ln m). Shared by the ordinal and oracle solvers so both use the
// same small-m convention (the clamp engages for m < 16).
double clamped_log_log(int m);

// ceil(sqrt(m * clamped_log_log(m))): items each agent may force in.
int flip_budget(int m);

// 2 * sqrt(m * clamped_log_log(m)): the largest |prefix sum| a draw may show.
double deviation_threshold(int m);

struct RandomizedResult {
  ItemSet set;
  int draws = 0;  // draws - 1 resamples
};

// Las Vegas version of the random-signs algorithm. Each draw includes every
// item with probability 1/2; draws whose prefix sums stray beyond
// deviation_threshold(m) for some agent are discarded. Each agent then forces
// in her flip_budget(m) most preferred excluded items, and the result is
// re-checked against every ranking. Deterministic in (profile, seed).
// Throws CapExceeded after `resample_cap` failed draws.
RandomizedResult solve_randomized_detailed(const OrdinalProfile& profile,
                                           std::uint64_t seed, int resample_cap = 64);
ItemSet solve_randomized(const OrdinalProfile& profile, std::uint64_t seed,
                         int resample_cap = 64);

struct MonotoneSubsequences {
  std::vector<int> increasing;
  std::vector<int> decreasing;
};

// A longest strictly increasing and a longest strictly decreasing subsequence
// (as values) of a sequence of distinct numbers. O(L log L).
MonotoneSubsequences longest_monotone_subsequence(std::span<const int> sequence);

enum class Orientation { kForward, kReverse };

// Items listed in agent 1's preference order. orientation[j] says whether
// agent j ranks them in listed order or exactly reversed.
struct MonotoneChunk {
  std::vector<int> items;
  std::vector<Orientation> orientation;
};

// Refines the alive items, agent by agent, to the longer of the longest
// increasing / decreasing subsequences in that agent's ranking (ties keep the
// increasing one). The result has length >= ceil(|alive|^(1/2^(n-1))).
MonotoneChunk common_monotone_subsequence(const OrdinalProfile& profile,
                                          const ItemSet& alive);

// 0-based positions {0, 2, 4, ...} plus k-1 when k is even. The selection is
// necessarily agreeable for the chunk order and for its reverse.
std::vector<int> alternating_selection(int k);

// Smallest r >= 1 with r^(2^(n-1)) >= k, i.e. max(1, ceil(k^(1/2^(n-1)))).
int chunk_length_target(int k, int num_agents);

struct DeterministicResult {
  ItemSet set;
  std::vector<int> chunk_lengths;
};

// Peels common monotone chunks off the remaining items and keeps the
// alternating selection of each. Throws CapExceeded above
// `max_agents` agents.
DeterministicResult solve_deterministic_detailed(const OrdinalProfile& profile,
                                                 int max_agents = 12);
ItemSet solve_deterministic(const OrdinalProfile& profile, int max_agents = 12);

// Exhaustive minimum necessarily agreeable set, by increasing size then
// lexicographically. Throws CapExceeded when m > max_items.
ItemSet solve_ordinal_bruteforce(const OrdinalProfile& profile, int max_items = 24);

}  // namespace agreeable

#endif  // AGREEABLE_ORDINAL_SOLVER_H_
