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

#include "agreeable/instance.h"

#include <limits>

#include "agreeable/errors.h"

namespace agreeable {
namespace {

constexpr std::int64_t kWeightLimit = std::int64_t{1} << 62;

}  // namespace

std::string describe(const ValidationReport& report) {
  std::string out;
  for (const ValidationIssue& issue : report) {
    if (!out.empty()) out += "; ";
    if (issue.agent >= 0) out += "agent " + std::to_string(issue.agent + 1) + ": ";
    out += issue.message;
  }
  return out;
}

OrdinalProfile::OrdinalProfile(int num_items, std::vector<std::vector<int>> rankings)
    : num_items_(num_items), rankings_(std::move(rankings)) {}

OrdinalProfile OrdinalProfile::from_external(
    int num_items, const std::vector<std::vector<int>>& rankings) {
  std::vector<std::vector<int>> internal = rankings;
  for (auto& row : internal) {
    for (int& x : row) --x;
  }
  return OrdinalProfile(num_items, std::move(internal));
}

std::vector<int> OrdinalProfile::positions(int agent) const {
  std::vector<int> pos(num_items_, -1);
  const auto& r = rankings_[agent];
  for (int k = 0; k < static_cast<int>(r.size()); ++k) {
    if (r[k] >= 0 && r[k] < num_items_) pos[r[k]] = k;
  }
  return pos;
}

ValidationReport validate_ordinal_profile(const OrdinalProfile& profile) {
  ValidationReport report;
  const int m = profile.num_items();
  if (m < 1) report.push_back({-1, -1, "at least one item is required"});
  if (profile.num_agents() < 1) {
    report.push_back({-1, -1, "at least one agent is required"});
  }
  for (int j = 0; j < profile.num_agents(); ++j) {
    auto ranking = profile.ranking(j);
    if (static_cast<int>(ranking.size()) != m) {
      report.push_back({j, -1, "ranking has " + std::to_string(ranking.size()) +
                                   " entries, expected " + std::to_string(m)});
    }
    std::vector<bool> seen(m > 0 ? m : 0, false);
    for (int item : ranking) {
      if (item < 0 || item >= m) {
        report.push_back({j, item, "item " + std::to_string(item + 1) + " out of range"});
      } else if (seen[item]) {
        report.push_back({j, item, "duplicate item " + std::to_string(item + 1)});
      } else {
        seen[item] = true;
      }
    }
  }
  return report;
}

void require_valid(const OrdinalProfile& profile) {
  ValidationReport report = validate_ordinal_profile(profile);
  if (!report.empty()) {
    throw InvalidArgument("invalid ordinal profile: " + describe(report));
  }
}

AdditiveProfile::AdditiveProfile(std::vector<std::vector<Rational>> utilities)
    : utilities_(std::move(utilities)) {
  for (const auto& row : utilities_) {
    Rational sum = 0;
    for (const auto& u : row) sum += u;
    totals_.push_back(sum);
  }
  init();
}

AdditiveProfile::AdditiveProfile(std::vector<std::vector<Rational>> utilities,
                                 std::vector<Rational> totals)
    : utilities_(std::move(utilities)), totals_(std::move(totals)) {
  if (totals_.size() != utilities_.size()) {
    throw InvalidArgument("one cached total per agent is required");
  }
  init();
}

AdditiveProfile AdditiveProfile::from_integers(
    const std::vector<std::vector<std::int64_t>>& utilities) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(utilities.size());
  for (const auto& row : utilities) {
    rows.emplace_back(row.begin(), row.end());
  }
  return AdditiveProfile(std::move(rows));
}

void AdditiveProfile::init() {
  if (utilities_.empty()) throw InvalidArgument("at least one agent is required");
  num_items_ = static_cast<int>(utilities_.front().size());
  if (num_items_ < 1) throw InvalidArgument("at least one item is required");
  for (const auto& row : utilities_) {
    if (static_cast<int>(row.size()) != num_items_) {
      throw InvalidArgument("utility rows differ in length");
    }
  }
  for (const auto& row : utilities_) {
    BigInt scale = 1;
    for (const auto& u : row) {
      const BigInt den = boost::multiprecision::denominator(u);
      if (den != 1) {
        integral_ = false;
        scale = boost::multiprecision::lcm(scale, den);
      }
    }
    std::vector<std::int64_t> weights;
    BigInt total = 0;
    for (const auto& u : row) {
      BigInt w = boost::multiprecision::numerator(u) * (scale / boost::multiprecision::denominator(u));
      total += w;
      if (boost::multiprecision::abs(w) >= kWeightLimit) {
        throw InvalidArgument("utilities too large for exact 64-bit weights");
      }
      weights.push_back(w.convert_to<std::int64_t>());
    }
    if (boost::multiprecision::abs(total) >= kWeightLimit) {
      throw InvalidArgument("utility row sum too large for exact 64-bit weights");
    }
    weights_.push_back(std::move(weights));
    weight_totals_.push_back(total.convert_to<std::int64_t>());
  }
}

Rational AdditiveProfile::value(int agent, const ItemSet& set) const {
  Rational sum = 0;
  for (int x : set.members()) sum += utilities_[agent][x];
  return sum;
}

ValidationReport validate_additive_profile(const AdditiveProfile& profile) {
  ValidationReport report;
  for (int i = 0; i < profile.num_agents(); ++i) {
    Rational sum = 0;
    for (int j = 0; j < profile.num_items(); ++j) {
      const Rational& u = profile.utility(i, j);
      if (u < 0) {
        report.push_back({i, j, "negative utility " + to_string(u) + " for item " +
                                    std::to_string(j + 1)});
      }
      sum += u;
    }
    if (sum != profile.total(i)) {
      report.push_back({i, -1, "cached total " + to_string(profile.total(i)) +
                                   " differs from row sum " + to_string(sum)});
    }
  }
  return report;
}

void require_valid(const AdditiveProfile& profile) {
  ValidationReport report = validate_additive_profile(profile);
  if (!report.empty()) {
    throw InvalidArgument("invalid additive profile: " + describe(report));
  }
}

}  // namespace agreeable
