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

#ifndef AGREEABLE_AGREEABILITY_H_
#define AGREEABLE_AGREEABILITY_H_

#include <span>
#include <vector>

#include "agreeable/instance.h"
#include "agreeable/item_set.h"
#include "agreeable/rational.h"
#include "agreeable/value_oracle.h"

namespace agreeable {

// True iff 2 * u_i(T) >= sigma_i for every agent. Exact.
// Throws InvalidArgument when T is over a different universe.
bool is_agreeable_additive(const AdditiveProfile& profile, const ItemSet& set);
bool is_agreeable_additive(const AdditiveProfile& profile, int agent, const ItemSet& set);

// True iff u_i(T) >= u_i(S \ T) for every agent. Always issues 2n queries
// (T and its complement per agent) so query counts do not depend on the
// answer.
bool is_agreeable_oracle(ValueOracle& oracle, const ItemSet& set);

// c_k = |I_k ∩ T| for k = 1..m, where I_k holds the k most preferred items.
// Element k-1 of the result is c_k.
std::vector<int> prefix_counts(std::span<const int> ranking, const ItemSet& set);

// Necessary agreeability w.r.t. a strict ranking: 2 * c_k >= k for all k.
// For strict rankings this is both sufficient and necessary.
bool is_necessarily_agreeable(std::span<const int> ranking, const ItemSet& set);
// Every agent of the profile.
bool is_necessarily_agreeable(const OrdinalProfile& profile, const ItemSet& set);

struct PrefixDeficit {
  int k = 0;          // 1-based prefix length
  Rational deficit;   // k/2 - c_k > 0

  friend bool operator==(const PrefixDeficit&, const PrefixDeficit&) = default;
};

// All prefixes violating 2 * c_k >= k; empty iff necessarily agreeable.
std::vector<PrefixDeficit> necessary_agreeability_deficits(std::span<const int> ranking,
                                                           const ItemSet& set);

}  // namespace agreeable

#endif  // AGREEABLE_AGREEABILITY_H_
