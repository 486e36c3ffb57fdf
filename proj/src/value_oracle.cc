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

#include "agreeable/value_oracle.h"

#include "agreeable/errors.h"

namespace agreeable {

AdditiveSetFunction::AdditiveSetFunction(AdditiveProfile profile)
    : profile_(std::move(profile)) {
  require_valid(profile_);
}

Rational AdditiveSetFunction::value(int agent, const ItemSet& set) const {
  const Rational& total = profile_.total(agent);
  if (total == 0) return 0;
  return profile_.value(agent, set) / total;
}

ValueOracle::ValueOracle(std::shared_ptr<const SetFunction> function)
    : function_(std::move(function)) {
  if (!function_) throw InvalidArgument("null set function");
}

Rational ValueOracle::query(int agent, const ItemSet& set) {
  if (agent < 0 || agent >= num_agents()) {
    throw InvalidArgument("oracle query for unknown agent " + std::to_string(agent + 1));
  }
  if (set.universe() != num_items()) {
    throw InvalidArgument("oracle query over a universe of " +
                          std::to_string(set.universe()) + " items, expected " +
                          std::to_string(num_items()));
  }
  ++report_.total;
  auto key = std::make_pair(agent, std::vector<int>(set.members().begin(),
                                                    set.members().end()));
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  ++report_.distinct;
  Rational value = function_->value(agent, set);
  if (value < 0 || value > 1) {
    throw InvalidArgument("oracle value " + to_string(value) + " outside [0, 1]");
  }
  cache_.emplace(std::move(key), value);
  return value;
}

void ValueOracle::reset() {
  cache_.clear();
  report_ = {};
}

}  // namespace agreeable
