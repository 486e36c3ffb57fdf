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

#include "agreeable/ordinal_solver.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "agreeable/agreeability.h"
#include "agreeable/errors.h"

namespace agreeable {
namespace {

// Index of a longest strictly increasing subsequence, by patience sorting.
std::vector<int> lis_indices(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> tails;          // indices of pile tops
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), seq[i],
                               [&](int idx, int v) { return seq[idx] < v; });
    const int pile = static_cast<int>(it - tails.begin());
    if (pile > 0) parent[i] = tails[pile - 1];
    if (it == tails.end()) {
      tails.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<int> out;
  for (int i = tails.empty() ? -1 : tails.back(); i >= 0; i = parent[i]) out.push_back(i);
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent,
                             std::uint64_t ceiling) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (r > ceiling / base) return ceiling + 1;
    r *= base;
  }
  return r;
}

}  // namespace

double clamped_log_log(int m) {
  if (m < 3) return 1.0;
  return std::max(1.0, std::log(std::log(static_cast<double>(m))));
}

int flip_budget(int m) {
  return static_cast<int>(std::ceil(std::sqrt(m * clamped_log_log(m))));
}

double deviation_threshold(int m) { return 2.0 * std::sqrt(m * clamped_log_log(m)); }

RandomizedResult solve_randomized_detailed(const OrdinalProfile& profile,
                                           std::uint64_t seed, int resample_cap) {
  require_valid(profile);
  const int m = profile.num_items();
  const int n = profile.num_agents();
  if (m == 1) return {ItemSet::full(1), 1};

  const int budget = flip_budget(m);
  const double threshold = deviation_threshold(m);
  std::mt19937_64 rng(seed);
  std::vector<bool> included(m);
  for (int draw = 1; draw <= resample_cap; ++draw) {
    for (int i = 0; i < m; ++i) included[i] = (rng() >> 63) != 0;

    bool within = true;
    for (int j = 0; j < n && within; ++j) {
      int sum = 0;
      for (int item : profile.ranking(j)) {
        sum += included[item] ? 1 : -1;
        if (std::abs(sum) > threshold) {
          within = false;
          break;
        }
      }
    }
    if (!within) continue;

    for (int j = 0; j < n; ++j) {
      int flipped = 0;
      for (int item : profile.ranking(j)) {
        if (flipped == budget) break;
        if (!included[item]) {
          included[item] = true;
          ++flipped;
        }
      }
    }

    std::vector<int> members;
    for (int i = 0; i < m; ++i) {
      if (included[i]) members.push_back(i);
    }
    ItemSet set = ItemSet::from_members(m, std::move(members));
    if (is_necessarily_agreeable(profile, set)) return {std::move(set), draw};
  }
  throw CapExceeded("randomized solver: resample budget of " +
                    std::to_string(resample_cap) + " draws exhausted");
}

ItemSet solve_randomized(const OrdinalProfile& profile, std::uint64_t seed,
                         int resample_cap) {
  return solve_randomized_detailed(profile, seed, resample_cap).set;
}

MonotoneSubsequences longest_monotone_subsequence(std::span<const int> sequence) {
  MonotoneSubsequences out;
  for (int i : lis_indices(sequence)) out.increasing.push_back(sequence[i]);
  std::vector<int> negated(sequence.begin(), sequence.end());
  for (int& v : negated) v = -v;
  for (int i : lis_indices(negated)) out.decreasing.push_back(sequence[i]);
  return out;
}

namespace {

MonotoneChunk extract_chunk(const OrdinalProfile& profile,
                            const std::vector<std::vector<int>>& positions,
                            std::vector<int> sequence) {
  const int n = profile.num_agents();
  MonotoneChunk chunk;
  chunk.orientation.assign(n, Orientation::kForward);
  for (int j = 1; j < n; ++j) {
    std::vector<int> ranks;
    ranks.reserve(sequence.size());
    for (int item : sequence) ranks.push_back(positions[j][item]);
    MonotoneSubsequences mono = longest_monotone_subsequence(ranks);
    const bool forward = mono.increasing.size() >= mono.decreasing.size();
    const std::vector<int>& kept = forward ? mono.increasing : mono.decreasing;
    chunk.orientation[j] = forward ? Orientation::kForward : Orientation::kReverse;
    sequence.clear();
    for (int rank : kept) sequence.push_back(profile.ranking(j)[rank]);
    // `kept` follows the previous listed order, so agent 1's order survives.
  }
  chunk.items = std::move(sequence);
  return chunk;
}

}  // namespace

MonotoneChunk common_monotone_subsequence(const OrdinalProfile& profile,
                                          const ItemSet& alive) {
  require_valid(profile);
  if (alive.universe() != profile.num_items()) {
    throw InvalidArgument("alive set over the wrong universe");
  }
  if (alive.empty()) throw InvalidArgument("alive set must be nonempty");
  std::vector<std::vector<int>> positions;
  for (int j = 0; j < profile.num_agents(); ++j) positions.push_back(profile.positions(j));
  std::vector<int> sequence;
  for (int item : profile.ranking(0)) {
    if (alive.contains(item)) sequence.push_back(item);
  }
  return extract_chunk(profile, positions, std::move(sequence));
}

std::vector<int> alternating_selection(int k) {
  if (k < 1) throw InvalidArgument("chunk length must be positive");
  std::vector<int> out;
  for (int i = 0; i < k; i += 2) out.push_back(i);
  if (k % 2 == 0) out.push_back(k - 1);
  return out;
}

int chunk_length_target(int k, int num_agents) {
  if (k <= 1) return 1;
  const std::uint64_t exponent =
      num_agents >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << (num_agents - 1);
  const std::uint64_t target = static_cast<std::uint64_t>(k);
  std::uint64_t r = 1;
  while (saturating_pow(r, exponent, target) < target) ++r;
  return static_cast<int>(r);
}

DeterministicResult solve_deterministic_detailed(const OrdinalProfile& profile,
                                                 int max_agents) {
  require_valid(profile);
  const int n = profile.num_agents();
  const int m = profile.num_items();
  if (n > max_agents) {
    throw CapExceeded("deterministic solver supports at most " +
                      std::to_string(max_agents) + " agents, got " + std::to_string(n));
  }
  std::vector<std::vector<int>> positions;
  for (int j = 0; j < n; ++j) positions.push_back(profile.positions(j));

  std::vector<bool> alive(m, true);
  int remaining = m;
  std::vector<int> selected;
  DeterministicResult result;
  while (remaining > 0) {
    std::vector<int> sequence;
    sequence.reserve(remaining);
    for (int item : profile.ranking(0)) {
      if (alive[item]) sequence.push_back(item);
    }
    MonotoneChunk chunk = extract_chunk(profile, positions, std::move(sequence));
    const int k = static_cast<int>(chunk.items.size());
    for (int pos : alternating_selection(k)) selected.push_back(chunk.items[pos]);
    for (int item : chunk.items) alive[item] = false;
    remaining -= k;
    result.chunk_lengths.push_back(k);
  }
  result.set = ItemSet::from_members(m, std::move(selected));
  return result;
}

ItemSet solve_deterministic(const OrdinalProfile& profile, int max_agents) {
  return solve_deterministic_detailed(profile, max_agents).set;
}

ItemSet solve_ordinal_bruteforce(const OrdinalProfile& profile, int max_items) {
  require_valid(profile);
  const int m = profile.num_items();
  if (m > max_items || m > 62) {
    throw CapExceeded("brute force limited to " + std::to_string(std::min(max_items, 62)) +
                      " items, instance has " + std::to_string(m));
  }
  std::vector<std::vector<int>> rankings = profile.rankings();
  for (int k = 0; k <= m; ++k) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int x : combo) mask |= std::uint64_t{1} << x;
      bool ok = true;
      for (const auto& ranking : rankings) {
        int c = 0;
        for (int pos = 0; pos < m && ok; ++pos) {
          if (mask >> ranking[pos] & 1) ++c;
          if (2 * c < pos + 1) ok = false;
        }
        if (!ok) break;
      }
      if (ok) return ItemSet::from_members(m, combo);
      int i = k - 1;
      while (i >= 0 && combo[i] == m - k + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int t = i + 1; t < k; ++t) combo[t] = combo[t - 1] + 1;
    }
  }
  return ItemSet::full(m);  // unreachable: S always passes
}

}  // namespace agreeable
