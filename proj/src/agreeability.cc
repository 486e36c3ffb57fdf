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

#include "agreeable/agreeability.h"

#include "agreeable/errors.h"

namespace agreeable {
namespace {

void check_universe(int expected, const ItemSet& set) {
  if (set.universe() != expected) {
    throw InvalidArgument("item set over " + std::to_string(set.universe()) +
                          " items, instance has " + std::to_string(expected));
  }
}

}  // namespace

bool is_agreeable_additive(const AdditiveProfile& profile, int agent, const ItemSet& set) {
  check_universe(profile.num_items(), set);
  auto weights = profile.weights(agent);
  std::int64_t inside = 0;
  for (int x : set.members()) inside += weights[x];
  return 2 * inside >= profile.weight_total(agent);
}

bool is_agreeable_additive(const AdditiveProfile& profile, const ItemSet& set) {
  check_universe(profile.num_items(), set);
  for (int i = 0; i < profile.num_agents(); ++i) {
    if (!is_agreeable_additive(profile, i, set)) return false;
  }
  return true;
}

bool is_agreeable_oracle(ValueOracle& oracle, const ItemSet& set) {
  check_universe(oracle.num_items(), set);
  const ItemSet rest = set.complement();
  bool agreeable = true;
  for (int i = 0; i < oracle.num_agents(); ++i) {
    Rational inside = oracle.query(i, set);
    Rational outside = oracle.query(i, rest);
    if (inside < outside) agreeable = false;
  }
  return agreeable;
}

std::vector<int> prefix_counts(std::span<const int> ranking, const ItemSet& set) {
  check_universe(static_cast<int>(ranking.size()), set);
  std::vector<bool> member(ranking.size(), false);
  for (int x : set.members()) member[x] = true;
  std::vector<int> counts;
  counts.reserve(ranking.size());
  int c = 0;
  for (int item : ranking) {
    if (member[item]) ++c;
    counts.push_back(c);
  }
  return counts;
}

bool is_necessarily_agreeable(std::span<const int> ranking, const ItemSet& set) {
  std::vector<int> counts = prefix_counts(ranking, set);
  for (size_t k = 1; k <= counts.size(); ++k) {
    if (2 * counts[k - 1] < static_cast<int>(k)) return false;
  }
  return true;
}

bool is_necessarily_agreeable(const OrdinalProfile& profile, const ItemSet& set) {
  for (int j = 0; j < profile.num_agents(); ++j) {
    if (!is_necessarily_agreeable(profile.ranking(j), set)) return false;
  }
  return true;
}

std::vector<PrefixDeficit> necessary_agreeability_deficits(std::span<const int> ranking,
                                                           const ItemSet& set) {
  std::vector<int> counts = prefix_counts(ranking, set);
  std::vector<PrefixDeficit> out;
  for (size_t k = 1; k <= counts.size(); ++k) {
    const int c = counts[k - 1];
    if (2 * c < static_cast<int>(k)) {
      out.push_back({static_cast<int>(k), Rational(static_cast<int>(k), 2) - c});
    }
  }
  return out;
}

}  // namespace agreeable
