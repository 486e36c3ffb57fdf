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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "agreeable/agreeability.h"
#include "agreeable/errors.h"
#include "agreeable/generators.h"
#include "agreeable/ordinal_solver.h"
#include "support/oracles.h"

namespace agreeable {
namespace {

OrdinalProfile ordinal(int m, std::vector<std::vector<int>> one_based) {
  return OrdinalProfile::from_external(m, one_based);
}

std::vector<int> identity_ranking(int m) {
  std::vector<int> r(m);
  std::iota(r.begin(), r.end(), 1);
  return r;
}

std::vector<int> reversed_ranking(int m) {
  std::vector<int> r = identity_ranking(m);
  std::reverse(r.begin(), r.end());
  return r;
}

bool strictly_increasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

bool strictly_decreasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end();
}

bool is_subsequence(const std::vector<int>& sub, const std::vector<int>& seq) {
  auto it = seq.begin();
  for (int x : sub) {
    it = std::find(it, seq.end(), x);
    if (it == seq.end()) return false;
    ++it;
  }
  return true;
}

TEST(Thresholds, SmallAndMediumM) {
  EXPECT_EQ(clamped_log_log(1), 1.0);
  EXPECT_EQ(clamped_log_log(2), 1.0);
  EXPECT_EQ(clamped_log_log(15), 1.0);
  EXPECT_NEAR(clamped_log_log(100), std::log(std::log(100.0)), 1e-12);
  EXPECT_EQ(flip_budget(100), 13);
  EXPECT_EQ(flip_budget(4), 2);
  EXPECT_DOUBLE_EQ(deviation_threshold(4), 4.0);
}

TEST(LongestMonotoneSubsequence, Examples) {
  auto a = longest_monotone_subsequence(std::vector<int>{1, 2, 3});
  EXPECT_EQ(a.increasing.size(), 3u);
  EXPECT_EQ(a.decreasing.size(), 1u);
  auto b = longest_monotone_subsequence(std::vector<int>{3, 2, 1});
  EXPECT_EQ(b.increasing.size(), 1u);
  EXPECT_EQ(b.decreasing.size(), 3u);
  auto c = longest_monotone_subsequence(std::vector<int>{2, 1, 4, 3});
  EXPECT_EQ(c.increasing.size(), 2u);
  EXPECT_EQ(c.decreasing.size(), 2u);
}

TEST(LongestMonotoneSubsequence, MatchesBruteForceAndErdosSzekeres) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int len = static_cast<int>(rng() % 13);
    std::vector<int> seq(len);
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    auto got = longest_monotone_subsequence(seq);
    auto [inc, dec] = testing::monotone_lengths_brute(seq);
    ASSERT_EQ(static_cast<int>(got.increasing.size()), inc);
    ASSERT_EQ(static_cast<int>(got.decreasing.size()), dec);
    ASSERT_TRUE(strictly_increasing(got.increasing));
    ASSERT_TRUE(strictly_decreasing(got.decreasing));
    ASSERT_TRUE(is_subsequence(got.increasing, seq));
    ASSERT_TRUE(is_subsequence(got.decreasing, seq));
    const int bound = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(len))));
    ASSERT_GE(std::max(inc, dec), bound);
  }
}

TEST(AlternatingSelection, Examples) {
  EXPECT_EQ(alternating_selection(5), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(alternating_selection(4), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(alternating_selection(1), (std::vector<int>{0}));
}

TEST(AlternatingSelection, NecessarilyAgreeableBothWays) {
  for (int k = 1; k <= 40; ++k) {
    std::vector<int> forward(k);
    std::iota(forward.begin(), forward.end(), 0);
    std::vector<int> backward(forward.rbegin(), forward.rend());
    ItemSet chosen = ItemSet::from_members(k, alternating_selection(k));
    EXPECT_TRUE(is_necessarily_agreeable(forward, chosen)) << k;
    EXPECT_TRUE(is_necessarily_agreeable(backward, chosen)) << k;
    EXPECT_LE(chosen.size(), (k + 1) / 2 + 1);
  }
}

TEST(ChunkLengthTarget, IntegerRoots) {
  EXPECT_EQ(chunk_length_target(1, 1), 1);
  EXPECT_EQ(chunk_length_target(7, 1), 7);
  EXPECT_EQ(chunk_length_target(9, 2), 3);
  EXPECT_EQ(chunk_length_target(10, 2), 4);
  EXPECT_EQ(chunk_length_target(16, 3), 2);
  EXPECT_EQ(chunk_length_target(17, 3), 3);
  EXPECT_EQ(chunk_length_target(1000, 12), 2);
}

TEST(CommonMonotoneSubsequence, SingleAgentTakesEverything) {
  auto p = ordinal(5, {{3, 1, 5, 2, 4}});
  auto chunk = common_monotone_subsequence(p, ItemSet::full(5));
  EXPECT_EQ(chunk.items, (std::vector<int>{2, 0, 4, 1, 3}));
  EXPECT_EQ(chunk.orientation, (std::vector<Orientation>{Orientation::kForward}));
}

TEST(CommonMonotoneSubsequence, ReversedAgent) {
  auto p = ordinal(4, {identity_ranking(4), reversed_ranking(4)});
  auto chunk = common_monotone_subsequence(p, ItemSet::full(4));
  EXPECT_EQ(chunk.items, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(chunk.orientation,
            (std::vector<Orientation>{Orientation::kForward, Orientation::kReverse}));
}

TEST(CommonMonotoneSubsequence, InterleavedPairs) {
  auto p = ordinal(4, {identity_ranking(4), {2, 1, 4, 3}});
  auto chunk = common_monotone_subsequence(p, ItemSet::full(4));
  EXPECT_GE(chunk.items.size(), 2u);
}

// Listed order must be agent 1's order, and each other agent must see the
// chunk in that order or exactly reversed.
void expect_valid_chunk(const OrdinalProfile& p, const ItemSet& alive,
                        const MonotoneChunk& chunk) {
  ASSERT_FALSE(chunk.items.empty());
  ASSERT_EQ(static_cast<int>(chunk.orientation.size()), p.num_agents());
  for (int x : chunk.items) ASSERT_TRUE(alive.contains(x));
  for (int j = 0; j < p.num_agents(); ++j) {
    std::vector<int> pos;
    for (int x : chunk.items) pos.push_back(p.positions(j)[x]);
    if (j == 0 || chunk.orientation[j] == Orientation::kForward) {
      ASSERT_TRUE(strictly_increasing(pos));
    } else {
      ASSERT_TRUE(strictly_decreasing(pos));
    }
  }
  ASSERT_GE(static_cast<int>(chunk.items.size()),
            chunk_length_target(alive.size(), p.num_agents()));
}

TEST(CommonMonotoneSubsequence, RandomProfilesMeetLengthBound) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 60);
    const int n = 1 + static_cast<int>(rng() % 4);
    auto p = gen_random_ordinal(m, n, rng());
    std::vector<int> alive_members;
    for (int x = 0; x < m; ++x) {
      if (rng() % 3 != 0) alive_members.push_back(x);
    }
    if (alive_members.empty()) alive_members.push_back(0);
    ItemSet alive = ItemSet::from_members(m, alive_members);
    expect_valid_chunk(p, alive, common_monotone_subsequence(p, alive));
  }
}

TEST(SolveRandomized, SingleItem) {
  EXPECT_EQ(solve_randomized(ordinal(1, {{1}}), 0), ItemSet::full(1));
}

TEST(SolveRandomized, TwoItemsContainsTop) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(solve_randomized(ordinal(2, {{1, 2}}), seed).contains(0));
  }
}

TEST(SolveRandomized, SizeBoundAtHundredItems) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto p = gen_random_ordinal(100, 2, seed + 1000);
    ItemSet t = solve_randomized(p, seed);
    EXPECT_LE(t.size(), 89);
    EXPECT_TRUE(is_necessarily_agreeable(p, t));
  }
}

TEST(SolveRandomized, DeterministicInSeed) {
  auto p = gen_random_ordinal(200, 3, 77);
  EXPECT_EQ(solve_randomized(p, 9), solve_randomized(p, 9));
  auto a = solve_randomized_detailed(p, 9);
  auto b = solve_randomized_detailed(p, 9);
  EXPECT_EQ(a.draws, b.draws);
}

TEST(SolveRandomized, AlwaysNecessarilyAgreeable) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 80);
    const int n = 1 + static_cast<int>(rng() % 5);
    auto p = gen_random_ordinal(m, n, rng());
    auto result = solve_randomized_detailed(p, rng());
    ASSERT_TRUE(is_necessarily_agreeable(p, result.set));
    ASSERT_GE(result.draws, 1);
  }
}

TEST(SolveRandomized, CapExhaustion) {
  auto p = gen_random_ordinal(50, 2, 4);
  EXPECT_THROW(solve_randomized(p, 1, 0), CapExceeded);
}

TEST(SolveDeterministic, SingleAgentAlternates) {
  for (int m = 1; m <= 12; ++m) {
    auto p = ordinal(m, {identity_ranking(m)});
    ItemSet t = solve_deterministic(p);
    std::vector<int> expected;
    for (int x = 0; x < m; x += 2) expected.push_back(x);
    if (m % 2 == 0) expected.push_back(m - 1);
    EXPECT_EQ(t, ItemSet::from_members(m, expected)) << m;
  }
}

TEST(SolveDeterministic, OppositeRankingsOneChunk) {
  auto p = ordinal(5, {identity_ranking(5), reversed_ranking(5)});
  auto result = solve_deterministic_detailed(p);
  EXPECT_EQ(result.set, ItemSet::from_external(5, std::vector<int>{1, 3, 5}));
  EXPECT_EQ(result.chunk_lengths, (std::vector<int>{5}));
}

TEST(SolveDeterministic, InterleavedPairs) {
  auto p = ordinal(4, {identity_ranking(4), {2, 1, 4, 3}});
  ItemSet t = solve_deterministic(p);
  EXPECT_TRUE(is_necessarily_agreeable(p, t));
  EXPECT_LE(t.size(), 4);
}

TEST(SolveDeterministic, SizeAccounting) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 120);
    const int n = 1 + static_cast<int>(rng() % 4);
    auto p = gen_random_ordinal(m, n, rng());
    auto result = solve_deterministic_detailed(p);
    ASSERT_TRUE(is_necessarily_agreeable(p, result.set));
    const int chunks = static_cast<int>(result.chunk_lengths.size());
    ASSERT_LE(result.set.size(), (m + 1) / 2 + chunks);
    ASSERT_EQ(std::accumulate(result.chunk_lengths.begin(), result.chunk_lengths.end(), 0), m);
  }
}

TEST(SolveDeterministic, AgentCap) {
  auto p = gen_random_ordinal(10, 3, 1);
  EXPECT_THROW(solve_deterministic(p, 2), CapExceeded);
}

TEST(SolveOrdinalBruteforce, MatchesExhaustiveMinimum) {
  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 8);
    const int n = 1 + static_cast<int>(rng() % 3);
    auto p = gen_random_ordinal(m, n, rng());
    int best = m + 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        ok = testing::necessarily_agreeable_by_matching(p.rankings()[j], mask);
      }
      if (ok) best = std::min(best, testing::popcount(mask));
    }
    ItemSet t = solve_ordinal_bruteforce(p);
    ASSERT_EQ(t.size(), best);
    ASSERT_TRUE(is_necessarily_agreeable(p, t));
    ASSERT_LE(t.size(), solve_deterministic(p).size());
  }
  EXPECT_THROW(solve_ordinal_bruteforce(gen_random_ordinal(10, 1, 0), 8), CapExceeded);
}

}  // namespace
}  // namespace agreeable
