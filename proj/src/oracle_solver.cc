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

#include "agreeable/oracle_solver.h"

#include <algorithm>
#include <cmath>

#include "agreeable/agreeability.h"
#include "agreeable/errors.h"
#include "agreeable/ordinal_solver.h"

namespace agreeable {

CoverParams choose_parameters(int m, const Rational& epsilon, std::uint64_t max_blocks) {
  if (m < 2) throw InvalidArgument("covering parameters need m >= 2");
  if (epsilon <= 0) throw InvalidArgument("epsilon must be positive");
  const double eps = to_double(epsilon);
  const double log_m = std::log(static_cast<double>(m));
  const double loglog = clamped_log_log(m);

  CoverParams params;
  params.epsilon = epsilon;
  params.q = std::max(1, static_cast<int>(std::floor(log_m / (eps * loglog))));
  const double p = std::floor(eps * m * loglog / (params.q * log_m));
  params.p = static_cast<int>(std::clamp(p, 1.0, static_cast<double>(m)));
  params.p = std::min(params.p, m / params.q);
  params.num_parts = (m + params.p - 1) / params.p;
  params.ell = binomial_capped(params.num_parts, params.q, max_blocks);
  if (params.ell > max_blocks) {
    throw CapExceeded("covering design for m=" + std::to_string(m) + ", epsilon=" +
                      to_string(epsilon) + " needs more than " +
                      std::to_string(max_blocks) + " blocks; raise epsilon");
  }
  return params;
}

PlantedOracle::PlantedOracle(int num_items, ItemSet planted)
    : num_items_(num_items), planted_(std::move(planted)) {
  if (num_items < 1) throw InvalidArgument("planted oracle needs at least one item");
  if (planted_.universe() != num_items) {
    throw InvalidArgument("planted set over the wrong universe");
  }
}

Rational PlantedOracle::value(int, const ItemSet& set) const {
  if (2 * set.size() >= num_items_) return 1;
  if (!planted_.empty() && planted_.is_subset_of(set)) return 1;
  return 0;
}

PlantedOracle make_planted_oracle(int m, const ItemSet& t_star) {
  return PlantedOracle(m, t_star);
}

int planted_optimum_size(const PlantedOracle& oracle) {
  const int half = (oracle.num_items() + 1) / 2;
  if (oracle.planted().empty()) return half;
  return std::min(oracle.planted().size(), half);
}

OracleSolveResult solve_oracle_detailed(ValueOracle& oracle, const Rational& epsilon,
                                        std::uint64_t max_blocks) {
  const int m = oracle.num_items();
  OracleSolveResult result;
  if (m == 1) {
    result.set = solve_oracle_bruteforce(oracle, 1);
    result.queries = oracle.report();
    return result;
  }
  CoverParams params = choose_parameters(m, epsilon, max_blocks);
  CoveringDesign design = build_covering_design(m, params.p, params.q, max_blocks);
  ItemSet found;
  const std::int64_t index = design.for_each_block([&](const ItemSet& block) {
    if (!is_agreeable_oracle(oracle, block)) return false;
    found = block;
    return true;
  });
  result.params = params;
  if (index >= 0) {
    result.set = std::move(found);
    result.block_index = index;
  } else {
    result.set = ItemSet::full(m);
  }
  result.queries = oracle.report();
  return result;
}

ItemSet solve_oracle(ValueOracle& oracle, const Rational& epsilon,
                     std::uint64_t max_blocks) {
  return solve_oracle_detailed(oracle, epsilon, max_blocks).set;
}

ItemSet solve_oracle_bruteforce(ValueOracle& oracle, int max_items) {
  const int m = oracle.num_items();
  if (m > max_items || m > 62) {
    throw CapExceeded("oracle brute force limited to " +
                      std::to_string(std::min(max_items, 62)) + " items, instance has " +
                      std::to_string(m));
  }
  for (int k = 0; k <= m; ++k) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      ItemSet candidate = ItemSet::from_members(m, combo);
      if (is_agreeable_oracle(oracle, candidate)) return candidate;
      int i = k - 1;
      while (i >= 0 && combo[i] == m - k + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int t = i + 1; t < k; ++t) combo[t] = combo[t - 1] + 1;
    }
  }
  throw InvalidArgument("no agreeable set found; the oracle is not monotone");
}

}  // namespace agreeable
