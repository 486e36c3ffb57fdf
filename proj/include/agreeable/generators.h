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

#ifndef AGREEABLE_GENERATORS_H_
#define AGREEABLE_GENERATORS_H_

#include <cstdint>
#include <random>

#include "agreeable/instance.h"

namespace agreeable {

// Uniform integer in [0, bound) by rejection sampling on raw 64-bit draws.
// Unlike std::uniform_int_distribution the stream is identical on every
// standard library, so seeded instances are reproducible across toolchains.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// n x m utilities drawn i.i.d. uniformly from [0, max_u].
AdditiveProfile gen_random_additive(int m, int n, std::int64_t max_u, std::uint64_t seed);

// n independent uniformly random rankings of m items.
OrdinalProfile gen_random_ordinal(int m, int n, std::uint64_t seed);

}  // namespace agreeable

#endif  // AGREEABLE_GENERATORS_H_
