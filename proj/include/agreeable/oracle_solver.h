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

#ifndef AGREEABLE_ORACLE_SOLVER_H_
#define AGREEABLE_ORACLE_SOLVER_H_

#include <cstdint>
#include <memory>
#include <optional>

#include "agreeable/covering_design.h"
#include "agreeable/item_set.h"
#include "agreeable/rational.h"
#include "agreeable/value_oracle.h"

namespace agreeable {

struct CoverParams {
  Rational epsilon;
  int q = 1;              // subsets of size <= q are covered
  int p = 1;              // part size
  int num_parts = 1;      // ceil(m / p)
  std::uint64_t ell = 1;  // C(num_parts, q) blocks

  int block_size() const { return p * q; }
};

// q = max(1, floor(ln m / (eps * L))), p = max(1, floor(eps * m * L / (q ln m)))
// with L = max(1, ln ln m), then p lowered until p*q <= m.
// Throws InvalidArgument for m < 2 or eps <= 0, CapExceeded when ell exceeds
// max_blocks (epsilon too small for this m).
CoverParams choose_parameters(int m, const Rational& epsilon,
                              std::uint64_t max_blocks = 1'000'000);

// The single-agent threshold family: value 1 iff |T| >= m/2 or the planted
// set is contained in T. An empty planted set gives the plain threshold
// function with no small agreeable set.
class PlantedOracle final : public SetFunction {
 public:
  PlantedOracle(int num_items, ItemSet planted);

  int num_items() const override { return num_items_; }
  int num_agents() const override { return 1; }
  Rational value(int agent, const ItemSet& set) const override;

  const ItemSet& planted() const { return planted_; }

  friend bool operator==(const PlantedOracle& a, const PlantedOracle& b) {
    return a.num_items_ == b.num_items_ && a.planted_ == b.planted_;
  }

 private:
  int num_items_;
  ItemSet planted_;
};

PlantedOracle make_planted_oracle(int m, const ItemSet& t_star);

// Size of a minimum agreeable set for a planted oracle: min(|T*|, ceil(m/2))
// for nonempty T*, ceil(m/2) for the plain threshold function.
int planted_optimum_size(const PlantedOracle& oracle);

struct OracleSolveResult {
  ItemSet set;
  std::optional<CoverParams> params;       // absent for m = 1
  std::optional<std::int64_t> block_index; // absent when S was returned
  QueryReport queries;
};

// Queries every covering-design block and its complement for every agent and
// returns the first agreeable block; falls back to S (agreeable for any
// monotone oracle, and not re-queried). At most 2 * n * ell queries.
// m = 1 is settled by checking {} and then {x1}.
OracleSolveResult solve_oracle_detailed(ValueOracle& oracle, const Rational& epsilon,
                                        std::uint64_t max_blocks = 1'000'000);
ItemSet solve_oracle(ValueOracle& oracle, const Rational& epsilon,
                     std::uint64_t max_blocks = 1'000'000);

// Exhaustive search through the oracle by increasing size, then
// lexicographically. Throws CapExceeded when m > max_items.
ItemSet solve_oracle_bruteforce(ValueOracle& oracle, int max_items = 24);

}  // namespace agreeable

#endif  // AGREEABLE_ORACLE_SOLVER_H_
