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

#ifndef AGREEABLE_REDUCTIONS_H_
#define AGREEABLE_REDUCTIONS_H_

#include <cstdint>
#include <vector>

#include "agreeable/instance.h"

namespace agreeable {

// Multiset of nonnegative integers, in input order.
struct PartitionInstance {
  std::vector<std::int64_t> values;

  std::int64_t total() const;
  friend bool operator==(const PartitionInstance&, const PartitionInstance&) = default;
};

// Two agents over |A| items: u_1(x_i) = a_i and u_2(x_i) = M - a_i with
// M = sum(A). A has a balanced equal-sum split iff the profile has an
// agreeable set of exactly |A|/2 items. Throws InvalidArgument on an empty or
// odd-sized multiset or negative values.
AdditiveProfile from_partition(const PartitionInstance& a);

// Appends |B| zeros: B splits into equal sums iff the result has a balanced
// equal-sum split. Throws InvalidArgument on negative elements.
PartitionInstance balanced_from_2partition(const PartitionInstance& b);

// CNF formula with DIMACS literals: +v is y_v, -v is not y_v, 1 <= v <= num_vars.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Removes repeated literals and rewrites each unit clause (l) as
// (l | z) & (l | !z) over a fresh variable z. Satisfiability is preserved.
// Throws InvalidArgument on empty, tautological, over-long (> 3 literals) or
// out-of-range clauses.
CnfFormula preprocess_clauses(const CnfFormula& formula);

// Item numbering of the 3SAT gadget: y_v -> 2(v-1), !y_v -> 2(v-1)+1, and the
// special item a last, at 2 * num_vars.
int literal_item(int literal);
int special_item(const CnfFormula& formula);

// Agents C_1..C_m' then y_1..y_n'; items are the 2n' literals plus a. Every
// agent values a at 1; a clause agent values its literals at 1; a variable
// agent values both of its literals at 1. The formula is satisfiable iff an
// agreeable set of n' + 1 items exists. Clauses must have 2 or 3 distinct,
// non-complementary literals (see preprocess_clauses).
AdditiveProfile from_3sat(const CnfFormula& formula);

// Ground set {1..universe_size} and a collection of subsets of it.
struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> subsets;

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

// One agent per element; items are the subsets in order followed by the
// special item t. u_a(C) = 1 if a is in C, u_a(t) = deg(a) - 1. The minimum
// agreeable set has size (minimum cover) + 1, and removing t from any
// agreeable set leaves a cover. Throws InvalidArgument when an element lies
// in fewer than two subsets or a subset is malformed.
AdditiveProfile from_setcover(const SetCoverInstance& instance);

}  // namespace agreeable

#endif  // AGREEABLE_REDUCTIONS_H_
