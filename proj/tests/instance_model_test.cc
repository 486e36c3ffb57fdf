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

#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "agreeable/errors.h"
#include "agreeable/instance.h"
#include "agreeable/item_set.h"
#include "agreeable/limits.h"
#include "agreeable/rational.h"

namespace agreeable {
namespace {

TEST(ValidateOrdinalProfile, IdentityIsValid) {
  EXPECT_TRUE(validate_ordinal_profile(OrdinalProfile::from_external(3, {{1, 2, 3}})).empty());
}

TEST(ValidateOrdinalProfile, DuplicateIndexIsFlagged) {
  ValidationReport report =
      validate_ordinal_profile(OrdinalProfile::from_external(3, {{1, 1, 3}}));
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0].agent, 0);
  EXPECT_EQ(report[0].item, 0);
  EXPECT_NE(report[0].message.find("duplicate item 1"), std::string::npos);
}

TEST(ValidateOrdinalProfile, TwoPermutationsAreValid) {
  EXPECT_TRUE(
      validate_ordinal_profile(OrdinalProfile::from_external(2, {{2, 1}, {1, 2}})).empty());
}

TEST(ValidateOrdinalProfile, ListsEveryBadAgent) {
  auto profile = OrdinalProfile::from_external(3, {{1, 2}, {1, 2, 3}, {4, 2, 1}});
  ValidationReport report = validate_ordinal_profile(profile);
  ASSERT_EQ(report.size(), 2u);
  EXPECT_EQ(report[0].agent, 0);
  EXPECT_EQ(report[1].agent, 2);
  EXPECT_THROW(require_valid(profile), InvalidArgument);
}

TEST(ValidateAdditiveProfile, SimpleRow) {
  auto profile = AdditiveProfile::from_integers({{1, 2}});
  EXPECT_TRUE(validate_additive_profile(profile).empty());
  EXPECT_EQ(profile.total(0), 3);
}

TEST(ValidateAdditiveProfile, NegativeEntryIsFlagged) {
  auto profile = AdditiveProfile::from_integers({{-1, 2}});
  ValidationReport report = validate_additive_profile(profile);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0].agent, 0);
  EXPECT_EQ(report[0].item, 0);
  EXPECT_THROW(require_valid(profile), InvalidArgument);
}

TEST(ValidateAdditiveProfile, ZeroProfileAllowed) {
  auto profile = AdditiveProfile::from_integers({{0, 0}});
  EXPECT_TRUE(validate_additive_profile(profile).empty());
  EXPECT_EQ(profile.total(0), 0);
}

TEST(ValidateAdditiveProfile, StaleTotalIsFlagged) {
  AdditiveProfile profile({{Rational(1), Rational(2)}}, {Rational(4)});
  ValidationReport report = validate_additive_profile(profile);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0].item, -1);
  EXPECT_NE(report[0].message.find("cached total"), std::string::npos);
}

TEST(AdditiveProfile, RaggedRowsRejected) {
  EXPECT_THROW(AdditiveProfile::from_integers({{1, 2}, {1}}), InvalidArgument);
  EXPECT_THROW(AdditiveProfile::from_integers({}), InvalidArgument);
}

TEST(AdditiveProfile, RationalRowsScaleToIntegerWeights) {
  AdditiveProfile profile({{Rational(1, 2), Rational(1, 3), Rational(2)}});
  EXPECT_FALSE(profile.is_integral());
  EXPECT_EQ(profile.total(0), Rational(17, 6));
  std::vector<std::int64_t> w(profile.weights(0).begin(), profile.weights(0).end());
  EXPECT_EQ(w, (std::vector<std::int64_t>{3, 2, 12}));
  EXPECT_EQ(profile.weight_total(0), 17);
}

TEST(ItemSet, ComplementAndCardinality) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 20);
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << m) - 1);
    ItemSet t = ItemSet::from_mask(m, mask);
    EXPECT_EQ(t.complement().complement(), t);
    EXPECT_EQ(t.size() + t.complement().size(), m);
    for (int x = 0; x < m; ++x) EXPECT_NE(t.contains(x), t.complement().contains(x));
  }
}

TEST(ItemSet, RejectsBadMembers) {
  EXPECT_THROW(ItemSet::from_members(3, {0, 3}), InvalidArgument);
  EXPECT_THROW(ItemSet::from_members(3, {1, 1}), InvalidArgument);
  EXPECT_THROW(ItemSet::from_external(3, std::vector<int>{0}), InvalidArgument);
}

TEST(ItemSet, ExternalNumberingIsOneBased) {
  ItemSet t = parse_item_set(5, "4, 1 3");
  EXPECT_EQ(t.external(), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(t.to_string(), "1 3 4");
  EXPECT_EQ(ItemSet(5).to_string(), "");
  EXPECT_THROW(parse_item_set(5, "1 x"), ParseError);
}

TEST(AdditiveProfile, SetAndComplementSumToTotal) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 10);
    std::vector<std::vector<Rational>> rows(2, std::vector<Rational>(m));
    for (auto& row : rows) {
      for (auto& u : row) u = Rational(static_cast<long long>(rng() % 50), 1 + rng() % 7);
    }
    AdditiveProfile p(rows);
    ItemSet t = ItemSet::from_mask(m, rng() & ((std::uint64_t{1} << m) - 1));
    for (int i = 0; i < 2; ++i) EXPECT_EQ(p.value(i, t) + p.value(i, t.complement()), p.total(i));
  }
}

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(parse_rational(" 3/4 "), Rational(3, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("010"), 10);
  EXPECT_EQ(parse_rational("010/08"), Rational(5, 4));
  EXPECT_EQ(parse_rational("0"), 0);
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Limits, EnvironmentOverrides) {
  ::setenv("AGREEABLE_MAX_BRUTE_ITEMS", "12", 1);
  ::setenv("AGREEABLE_RESAMPLE_CAP", "3", 1);
  Limits limits = Limits::from_environment();
  EXPECT_EQ(limits.max_brute_items, 12);
  EXPECT_EQ(limits.resample_cap, 3);
  EXPECT_EQ(limits.max_cover_blocks, 1'000'000u);
  ::setenv("AGREEABLE_RESAMPLE_CAP", "zero", 1);
  EXPECT_THROW(Limits::from_environment(), InvalidArgument);
  ::unsetenv("AGREEABLE_MAX_BRUTE_ITEMS");
  ::unsetenv("AGREEABLE_RESAMPLE_CAP");
}

}  // namespace
}  // namespace agreeable
