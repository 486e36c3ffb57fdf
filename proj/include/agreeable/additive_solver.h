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

#ifndef AGREEABLE_ADDITIVE_SOLVER_H_
#define AGREEABLE_ADDITIVE_SOLVER_H_

#include <cstdint>
#include <vector>

#include "agreeable/instance.h"
#include "agreeable/item_set.h"
#include "agreeable/rational.h"

namespace agreeable {

// Minimum-cardinality agreeable set by exhaustive enumeration, smallest size
// first and lexicographically smallest member list within a size.
// Throws CapExceeded when m > max_items (hard maximum 62).
ItemSet solve_bruteforce(const AdditiveProfile& profile, int max_items = 24);

struct DpLimits {
  int max_agents = 4;
  std::uint64_t max_cells = 4'000'000'000ULL;
};

struct DpResult {
  ItemSet set;
  std::size_t states = 0;  // distinct utility vectors reached
};

// Pseudo-polynomial dynamic program over the first m' items and the exact
// utility vector (y_1..y_n) each agent receives. Only reachable vectors are
// stored. Among sets of equal size reaching the same vector the
// lexicographically smaller one is kept, so the answer coincides with
// solve_bruteforce. Throws InvalidArgument for non-integer utilities and
// CapExceeded when n or (m+1) * prod(sigma_i + 1) exceeds the limits.
DpResult solve_dp_detailed(const AdditiveProfile& profile, const DpLimits& limits = {});
ItemSet solve_dp(const AdditiveProfile& profile, const DpLimits& limits = {});

// Covering-integer-program view: row i is 2 u_i(s) / sigma_i for every agent
// with sigma_i > 0, and agreeability is A x >= 1 with x in {0,1}^m. Agents
// with sigma_i = 0 are satisfied by every set and get no row.
struct CoverMatrix {
  int num_items = 0;
  std::vector<int> agents;               // agent of each retained row
  std::vector<int> trivially_satisfied;  // agents with sigma_i = 0
  std::vector<std::vector<Rational>> rows;
};

CoverMatrix build_cover_matrix(const AdditiveProfile& profile);

// Greedy multicover: repeatedly add the item with the largest total truncated
// gain sum_i min(A_is, remaining deficit of row i), smallest index on ties,
// until every row reaches 1.
ItemSet solve_greedy_cip(const AdditiveProfile& profile);

}  // namespace agreeable

#endif  // AGREEABLE_ADDITIVE_SOLVER_H_
