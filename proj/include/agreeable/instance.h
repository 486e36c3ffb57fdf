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

#ifndef AGREEABLE_INSTANCE_H_
#define AGREEABLE_INSTANCE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "agreeable/item_set.h"
#include "agreeable/rational.h"

namespace agreeable {

// One finding of a validator. `agent` and `item` are 0-based, -1 when the
// finding is not tied to a particular agent or item.
struct ValidationIssue {
  int agent = -1;
  int item = -1;
  std::string message;

  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

// Empty means valid.
using ValidationReport = std::vector<ValidationIssue>;

std::string describe(const ValidationReport& report);

// Per-agent strict rankings of the items. ranking(j)[r] is agent j's item at
// preference position r (position 0 is the most preferred).
class OrdinalProfile {
 public:
  // No validation happens here; see validate_ordinal_profile().
  OrdinalProfile(int num_items, std::vector<std::vector<int>> rankings);
  // Rankings given with 1-based item numbers.
  static OrdinalProfile from_external(int num_items,
                                      const std::vector<std::vector<int>>& rankings);

  int num_items() const { return num_items_; }
  int num_agents() const { return static_cast<int>(rankings_.size()); }
  std::span<const int> ranking(int agent) const { return rankings_[agent]; }
  const std::vector<std::vector<int>>& rankings() const { return rankings_; }

  // position(agent)[item] = rank position of item for that agent.
  // Only meaningful for a valid profile.
  std::vector<int> positions(int agent) const;

  friend bool operator==(const OrdinalProfile&, const OrdinalProfile&) = default;

 private:
  int num_items_;
  std::vector<std::vector<int>> rankings_;
};

ValidationReport validate_ordinal_profile(const OrdinalProfile& profile);
// Throws InvalidArgument carrying the report when it is non-empty.
void require_valid(const OrdinalProfile& profile);

// Additive utilities u_i(x_j) >= 0 with cached per-agent totals.
//
// Besides the exact rationals, every row is also kept as int64 weights scaled
// by the least common multiple of that row's denominators. Agreeability is
// invariant under positive row scaling, so all hot loops compare
// 2 * weight(T) >= weight_total with plain integers.
class AdditiveProfile {
 public:
  // Totals are computed from the rows. Throws InvalidArgument on ragged or
  // empty matrices and when the scaled weights do not fit in 62 bits.
  explicit AdditiveProfile(std::vector<std::vector<Rational>> utilities);
  // Caller-supplied totals; validate_additive_profile() flags stale ones.
  AdditiveProfile(std::vector<std::vector<Rational>> utilities,
                  std::vector<Rational> totals);

  static AdditiveProfile from_integers(
      const std::vector<std::vector<std::int64_t>>& utilities);

  int num_agents() const { return static_cast<int>(utilities_.size()); }
  int num_items() const { return num_items_; }
  const Rational& utility(int agent, int item) const {
    return utilities_[agent][item];
  }
  const std::vector<Rational>& row(int agent) const { return utilities_[agent]; }
  const std::vector<std::vector<Rational>>& utilities() const { return utilities_; }
  const Rational& total(int agent) const { return totals_[agent]; }
  // True when every utility is an integer.
  bool is_integral() const { return integral_; }

  Rational value(int agent, const ItemSet& set) const;

  std::span<const std::int64_t> weights(int agent) const { return weights_[agent]; }
  std::int64_t weight_total(int agent) const { return weight_totals_[agent]; }

  friend bool operator==(const AdditiveProfile& a, const AdditiveProfile& b) {
    return a.utilities_ == b.utilities_ && a.totals_ == b.totals_;
  }

 private:
  void init();

  int num_items_ = 0;
  std::vector<std::vector<Rational>> utilities_;
  std::vector<Rational> totals_;
  bool integral_ = true;
  std::vector<std::vector<std::int64_t>> weights_;
  std::vector<std::int64_t> weight_totals_;
};

ValidationReport validate_additive_profile(const AdditiveProfile& profile);
void require_valid(const AdditiveProfile& profile);

}  // namespace agreeable

#endif  // AGREEABLE_INSTANCE_H_
