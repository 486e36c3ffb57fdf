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

#ifndef AGREEABLE_VALUE_ORACLE_H_
#define AGREEABLE_VALUE_ORACLE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "agreeable/instance.h"
#include "agreeable/item_set.h"
#include "agreeable/rational.h"

namespace agreeable {

// Black-box set utility u_i : 2^S -> [0, 1]. Implementations must be pure.
// Monotonicity is a caller contract; nothing here can check it.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int num_items() const = 0;
  virtual int num_agents() const = 0;
  virtual Rational value(int agent, const ItemSet& set) const = 0;
};

// u_i(T) / sigma_i for an additive profile (0 for agents with sigma_i = 0).
class AdditiveSetFunction final : public SetFunction {
 public:
  explicit AdditiveSetFunction(AdditiveProfile profile);
  int num_items() const override { return profile_.num_items(); }
  int num_agents() const override { return profile_.num_agents(); }
  Rational value(int agent, const ItemSet& set) const override;

 private:
  AdditiveProfile profile_;
};

struct QueryReport {
  // Every query issued, cache hits included.
  std::int64_t total = 0;
  // Distinct (agent, set) pairs, i.e. evaluator invocations.
  std::int64_t distinct = 0;

  friend bool operator==(const QueryReport&, const QueryReport&) = default;
};

// Query accountant around a SetFunction. Owned by one run; not thread-safe.
// Identical queries are answered from a cache, and every cache miss calls the
// evaluator exactly once, so report().distinct always equals the number of
// evaluator invocations.
class ValueOracle {
 public:
  explicit ValueOracle(std::shared_ptr<const SetFunction> function);

  int num_items() const { return function_->num_items(); }
  int num_agents() const { return function_->num_agents(); }
  const SetFunction& function() const { return *function_; }

  // Throws InvalidArgument for a bad agent, a set over the wrong universe, or
  // an evaluator value outside [0, 1].
  Rational query(int agent, const ItemSet& set);

  QueryReport report() const { return report_; }
  void reset();

 private:
  std::shared_ptr<const SetFunction> function_;
  std::map<std::pair<int, std::vector<int>>, Rational> cache_;
  QueryReport report_;
};

inline QueryReport query_report(const ValueOracle& oracle) { return oracle.report(); }

}  // namespace agreeable

#endif  // AGREEABLE_VALUE_ORACLE_H_
