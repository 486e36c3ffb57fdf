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

#include "agreeable/generators.h"

#include <limits>
#include <numeric>

#include "agreeable/errors.h"

namespace agreeable {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below needs a positive bound");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

AdditiveProfile gen_random_additive(int m, int n, std::int64_t max_u, std::uint64_t seed) {
  if (m < 1 || n < 1) throw InvalidArgument("need at least one item and one agent");
  if (max_u < 0) throw InvalidArgument("max utility must be nonnegative");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(m));
  for (auto& row : rows) {
    for (auto& u : row) {
      u = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(max_u) + 1));
    }
  }
  return AdditiveProfile::from_integers(rows);
}

OrdinalProfile gen_random_ordinal(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw InvalidArgument("need at least one item and one agent");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> rankings(n, std::vector<int>(m));
  for (auto& ranking : rankings) {
    std::iota(ranking.begin(), ranking.end(), 0);
    for (int i = m - 1; i > 0; --i) {
      const int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
      std::swap(ranking[i], ranking[j]);
    }
  }
  return OrdinalProfile(m, std::move(rankings));
}

}  // namespace agreeable
