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

#include "agreeable/reductions.h"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "agreeable/errors.h"

namespace agreeable {

std::int64_t PartitionInstance::total() const {
  std::int64_t sum = 0;
  for (std::int64_t v : values) sum += v;
  return sum;
}

AdditiveProfile from_partition(const PartitionInstance& a) {
  if (a.values.empty()) throw InvalidArgument("partition instance is empty");
  if (a.values.size() % 2 != 0) {
    throw InvalidArgument("balanced partition needs an even number of elements, got " +
                          std::to_string(a.values.size()));
  }
  for (std::int64_t v : a.values) {
    if (v < 0) throw InvalidArgument("partition elements must be nonnegative");
  }
  const std::int64_t total = a.total();
  std::vector<std::vector<std::int64_t>> rows(2);
  for (std::int64_t v : a.values) {
    rows[0].push_back(v);
    rows[1].push_back(total - v);
  }
  return AdditiveProfile::from_integers(rows);
}

PartitionInstance balanced_from_2partition(const PartitionInstance& b) {
  for (std::int64_t v : b.values) {
    if (v < 0) throw InvalidArgument("2-partition elements must be nonnegative");
  }
  PartitionInstance a = b;
  a.values.resize(2 * b.values.size(), 0);
  return a;
}

namespace {

std::vector<int> checked_clause(const std::vector<int>& clause, int num_vars,
                                size_t index) {
  const std::string where = "clause " + std::to_string(index + 1);
  if (clause.empty()) throw InvalidArgument(where + " is empty");
  std::set<int> literals;
  for (int lit : clause) {
    if (lit == 0 || std::abs(lit) > num_vars) {
      throw InvalidArgument(where + ": literal " + std::to_string(lit) + " out of range");
    }
    literals.insert(lit);
  }
  for (int lit : literals) {
    if (literals.count(-lit)) {
      throw InvalidArgument(where + " is tautological (contains " + std::to_string(lit) +
                            " and its negation)");
    }
  }
  if (literals.size() > 3) throw InvalidArgument(where + " has more than 3 literals");
  return {literals.begin(), literals.end()};
}

}  // namespace

CnfFormula preprocess_clauses(const CnfFormula& formula) {
  if (formula.num_vars < 0) throw InvalidArgument("negative variable count");
  CnfFormula out;
  out.num_vars = formula.num_vars;
  for (size_t c = 0; c < formula.clauses.size(); ++c) {
    std::vector<int> clause = checked_clause(formula.clauses[c], formula.num_vars, c);
    if (clause.size() == 1) {
      const int fresh = ++out.num_vars;
      out.clauses.push_back({clause[0], fresh});
      out.clauses.push_back({clause[0], -fresh});
    } else {
      out.clauses.push_back(std::move(clause));
    }
  }
  return out;
}

int literal_item(int literal) {
  const int v = std::abs(literal);
  return 2 * (v - 1) + (literal < 0 ? 1 : 0);
}

int special_item(const CnfFormula& formula) { return 2 * formula.num_vars; }

AdditiveProfile from_3sat(const CnfFormula& formula) {
  if (formula.num_vars < 1) throw InvalidArgument("formula needs at least one variable");
  const int m = 2 * formula.num_vars + 1;
  const int a = special_item(formula);
  std::vector<std::vector<std::int64_t>> rows;
  for (size_t c = 0; c < formula.clauses.size(); ++c) {
    const auto& raw = formula.clauses[c];
    std::vector<int> clause = checked_clause(raw, formula.num_vars, c);
    if (clause.size() != raw.size()) {
      throw InvalidArgument("clause " + std::to_string(c + 1) + " repeats a literal");
    }
    if (clause.size() < 2) {
      throw InvalidArgument("clause " + std::to_string(c + 1) +
                            " has a single literal; run preprocess_clauses first");
    }
    std::vector<std::int64_t> row(m, 0);
    row[a] = 1;
    for (int lit : clause) row[literal_item(lit)] = 1;
    rows.push_back(std::move(row));
  }
  for (int v = 1; v <= formula.num_vars; ++v) {
    std::vector<std::int64_t> row(m, 0);
    row[a] = 1;
    row[literal_item(v)] = 1;
    row[literal_item(-v)] = 1;
    rows.push_back(std::move(row));
  }
  return AdditiveProfile::from_integers(rows);
}

AdditiveProfile from_setcover(const SetCoverInstance& instance) {
  const int u = instance.universe_size;
  if (u < 1) throw InvalidArgument("set cover ground set is empty");
  const int k = static_cast<int>(instance.subsets.size());
  std::vector<std::vector<std::int64_t>> rows(u, std::vector<std::int64_t>(k + 1, 0));
  for (int c = 0; c < k; ++c) {
    std::set<int> seen;
    for (int element : instance.subsets[c]) {
      if (element < 1 || element > u) {
        throw InvalidArgument("subset " + std::to_string(c + 1) + ": element " +
                              std::to_string(element) + " outside 1.." + std::to_string(u));
      }
      if (!seen.insert(element).second) {
        throw InvalidArgument("subset " + std::to_string(c + 1) + " repeats element " +
                              std::to_string(element));
      }
      rows[element - 1][c] = 1;
    }
  }
  for (int a = 0; a < u; ++a) {
    std::int64_t degree = 0;
    for (int c = 0; c < k; ++c) degree += rows[a][c];
    if (degree < 2) {
      throw InvalidArgument("element " + std::to_string(a + 1) + " lies in " +
                            std::to_string(degree) +
                            " subset(s); the gadget needs every element in at least 2");
    }
    rows[a][k] = degree - 1;
  }
  return AdditiveProfile::from_integers(rows);
}

}  // namespace agreeable
