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

#include <cmath>
#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "agreeable/agreeability.h"
#include "agreeable/covering_design.h"
#include "agreeable/errors.h"
#include "agreeable/generators.h"
#include "agreeable/oracle_solver.h"
#include "agreeable/ordinal_solver.h"
#include "support/oracles.h"

namespace agreeable {
namespace {

ItemSet items(int m, std::vector<int> one_based) { return ItemSet::from_external(m, one_based); }

std::uint64_t mask_of(const ItemSet& s) {
  std::uint64_t mask = 0;
  for (int x : s.members()) mask |= std::uint64_t{1} << x;
  return mask;
}

std::shared_ptr<const PlantedOracle> planted(int m, const ItemSet& t_star) {
  return std::make_shared<PlantedOracle>(m, t_star);
}

TEST(ChooseParameters, Examples) {
  CoverParams a = choose_parameters(16, 1);
  EXPECT_EQ(a.q, 2);
  EXPECT_EQ(a.p, 2);
  EXPECT_EQ(a.block_size(), 4);
  EXPECT_EQ(a.num_parts, 8);
  EXPECT_EQ(a.ell, 28u);

  CoverParams b = choose_parameters(2, 1);
  EXPECT_EQ(b.q, 1);
  EXPECT_EQ(b.p, 2);
  EXPECT_EQ(b.ell, 1u);

  EXPECT_EQ(choose_parameters(16, 100).q, 1);
}

TEST(ChooseParameters, LargerM) {
  CoverParams m64 = choose_parameters(64, 1);
  EXPECT_EQ(m64.q, 2);
  EXPECT_EQ(m64.p, 10);
  EXPECT_EQ(m64.ell, 21u);
  CoverParams m128 = choose_parameters(128, 1);
  EXPECT_EQ(m128.q, 3);
  EXPECT_EQ(m128.p, 13);
  EXPECT_EQ(m128.ell, 120u);
}

TEST(ChooseParameters, InvariantsOverRange) {
  for (int m = 2; m <= 300; ++m) {
    for (Rational eps : {Rational(1, 2), Rational(1), Rational(3)}) {
      CoverParams c;
      try {
        c = choose_parameters(m, eps);
      } catch (const CapExceeded&) {
        ASSERT_LT(eps, 1);
        continue;
      }
      ASSERT_GE(c.q, 1);
      ASSERT_GE(c.p, 1);
      ASSERT_LE(c.p * c.q, m);
      ASSERT_EQ(c.num_parts, (m + c.p - 1) / c.p);
    }
  }
}

TEST(ChooseParameters, Errors) {
  EXPECT_THROW(choose_parameters(1, 1), InvalidArgument);
  EXPECT_THROW(choose_parameters(16, 0), InvalidArgument);
  EXPECT_THROW(choose_parameters(16, -1), InvalidArgument);
  EXPECT_THROW(choose_parameters(4000, Rational(1, 100), 1000), CapExceeded);
}

TEST(CoveringDesign, SingleBlock) {
  auto d = build_covering_design(4, 2, 2);
  EXPECT_EQ(d.blocks(), (std::vector<ItemSet>{ItemSet::full(4)}));
}

TEST(CoveringDesign, SixItemsPairs) {
  auto d = build_covering_design(6, 2, 2);
  EXPECT_EQ(d.blocks(), (std::vector<ItemSet>{items(6, {1, 2, 3, 4}), items(6, {1, 2, 5, 6}),
                                              items(6, {3, 4, 5, 6})}));
}

TEST(CoveringDesign, SingletonParts) {
  auto d = build_covering_design(3, 1, 2);
  EXPECT_EQ(d.blocks(), (std::vector<ItemSet>{items(3, {1, 2}), items(3, {1, 3}),
                                              items(3, {2, 3})}));
}

TEST(CoveringDesign, ShortLastPartIsPadded) {
  auto d = build_covering_design(5, 2, 2);
  ASSERT_EQ(d.num_blocks(), 3u);
  for (const ItemSet& b : d.blocks()) EXPECT_EQ(b.size(), 4);
  EXPECT_EQ(d.blocks()[1], items(5, {1, 2, 3, 5}));
}

TEST(CoveringDesign, ExhaustiveCoverage) {
  for (int m = 1; m <= 30; ++m) {
    for (int p = 1; p <= m; ++p) {
      const int parts = (m + p - 1) / p;
      if (parts > 12) continue;
      for (int q = 1; q <= 3 && p * q <= m; ++q) {
        auto d = build_covering_design(m, p, q);
        std::vector<std::uint64_t> blocks;
        for (const ItemSet& b : d.blocks()) {
          ASSERT_EQ(b.size(), p * q);
          blocks.push_back(mask_of(b));
        }
        ASSERT_EQ(blocks.size(), d.num_blocks());
        // Subsets of size <= q: checking the maximal ones suffices, plus all
        // smaller ones when m < q would make none exist.
        auto covered = [&](std::uint64_t t) {
          for (std::uint64_t b : blocks) {
            if ((t & b) == t) return true;
          }
          return false;
        };
        for (int a = 0; a < m; ++a) {
          ASSERT_TRUE(covered(1ULL << a));
          for (int b = a + 1; b < m && q >= 2; ++b) {
            ASSERT_TRUE(covered((1ULL << a) | (1ULL << b))) << m << " " << p << " " << q;
            for (int c = b + 1; c < m && q >= 3; ++c) {
              ASSERT_TRUE(covered((1ULL << a) | (1ULL << b) | (1ULL << c)));
            }
          }
        }
      }
    }
  }
}

TEST(CoveringDesign, EarlyStopReportsIndex) {
  auto d = build_covering_design(6, 2, 2);
  EXPECT_EQ(d.for_each_block([](const ItemSet& b) { return b.contains(4); }), 1);
  EXPECT_EQ(d.for_each_block([](const ItemSet&) { return false; }), -1);
}

TEST(CoveringDesign, Errors) {
  EXPECT_THROW(build_covering_design(4, 0, 1), InvalidArgument);
  EXPECT_THROW(build_covering_design(4, 3, 2), InvalidArgument);
  EXPECT_THROW(build_covering_design(60, 1, 5, 1000), CapExceeded);
  EXPECT_EQ(binomial_capped(8, 2, 100), 28u);
  EXPECT_EQ(binomial_capped(60, 30, 1000), 1001u);
}

TEST(PlantedOracle, Values) {
  PlantedOracle f = make_planted_oracle(4, items(4, {1}));
  EXPECT_EQ(f.value(0, items(4, {1})), 1);
  EXPECT_EQ(f.value(0, items(4, {2})), 0);
  EXPECT_EQ(f.value(0, items(4, {2, 3})), 1);
  PlantedOracle g = make_planted_oracle(4, ItemSet(4));
  EXPECT_EQ(g.value(0, ItemSet(4)), 0);
  EXPECT_EQ(g.value(0, items(4, {3, 4})), 1);
}

TEST(PlantedOracle, OptimumMatchesBruteForce) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 80; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 10);
    std::vector<int> members;
    for (int x = 0; x < m; ++x) {
      if (rng() % 4 == 0) members.push_back(x);
    }
    auto fn = planted(m, ItemSet::from_members(m, members));
    ValueOracle oracle(fn);
    ASSERT_EQ(solve_oracle_bruteforce(oracle).size(), planted_optimum_size(*fn));
  }
}

TEST(SolveOracle, PlantedSingleton) {
  auto fn = planted(16, items(16, {1}));
  ValueOracle oracle(fn);
  auto r = solve_oracle_detailed(oracle, 1);
  EXPECT_EQ(r.set.size(), 4);
  EXPECT_TRUE(r.set.contains(0));
  EXPECT_EQ(r.set, items(16, {1, 2, 3, 4}));
  EXPECT_LE(r.queries.total, 56);
  ASSERT_TRUE(r.block_index.has_value());
  EXPECT_EQ(*r.block_index, 0);
}

TEST(SolveOracle, PureThresholdFallsBackToEverything) {
  ValueOracle oracle(planted(16, ItemSet(16)));
  auto r = solve_oracle_detailed(oracle, 1);
  EXPECT_EQ(r.set, ItemSet::full(16));
  EXPECT_FALSE(r.block_index.has_value());
  EXPECT_EQ(r.queries.total, 56);
  EXPECT_EQ(query_report(oracle).total, 56);
}

TEST(SolveOracle, SingleItem) {
  ValueOracle with(planted(1, ItemSet::full(1)));
  EXPECT_EQ(solve_oracle(with, 1), ItemSet::full(1));
  auto zero = std::make_shared<AdditiveSetFunction>(AdditiveProfile::from_integers({{0}}));
  ValueOracle without(zero);
  EXPECT_EQ(solve_oracle(without, 1), ItemSet(1));
}

TEST(SolveOracle, PlantedGapWithinBound) {
  std::mt19937_64 rng(8);
  for (int m : {16, 24, 40, 64, 100}) {
    CoverParams c = choose_parameters(m, 1);
    for (int trial = 0; trial < 10; ++trial) {
      const int size = 1 + static_cast<int>(rng() % c.q);
      std::vector<int> members;
      while (static_cast<int>(members.size()) < size) {
        int x = static_cast<int>(rng() % m);
        if (std::find(members.begin(), members.end(), x) == members.end()) members.push_back(x);
      }
      ItemSet t_star = ItemSet::from_members(m, members);
      ValueOracle oracle(planted(m, t_star));
      auto r = solve_oracle_detailed(oracle, 1);
      ASSERT_LE(r.set.size(), c.block_size());
      ASSERT_TRUE(t_star.is_subset_of(r.set));
      ASSERT_LE(r.queries.total, static_cast<std::int64_t>(2 * c.ell));
      const double L = clamped_log_log(m);
      ASSERT_LE(static_cast<double>(r.set.size()) / t_star.size(),
                m * L / std::log(static_cast<double>(m)) + 1);
    }
  }
}

TEST(SolveOracle, AdditiveBackedOutputsAgreeable) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 30);
    const int n = 1 + static_cast<int>(rng() % 3);
    auto p = gen_random_additive(m, n, 9, rng());
    ValueOracle oracle(std::make_shared<AdditiveSetFunction>(p));
    ItemSet t = solve_oracle(oracle, 1);
    ASSERT_TRUE(is_agreeable_additive(p, t));
  }
}

TEST(SolveOracle, FullSetAgreeableForMonotoneOracles) {
  for (int m = 1; m <= 20; ++m) {
    ValueOracle oracle(planted(m, ItemSet(m)));
    EXPECT_TRUE(is_agreeable_oracle(oracle, ItemSet::full(m)));
  }
}

}  // namespace
}  // namespace agreeable
