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

#include "agreeable/additive_solver.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "agreeable/errors.h"

namespace agreeable {
namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct DpNode {
  int count;
  int parent;
  int item;
};

std::vector<int> materialize(const std::vector<DpNode>& nodes, int id) {
  std::vector<int> items;
  for (; nodes[id].parent >= 0; id = nodes[id].parent) items.push_back(nodes[id].item);
  std::reverse(items.begin(), items.end());
  return items;
}

// True when node a is a strictly better (smaller, then lexicographically
// smaller) set than node b.
bool better(const std::vector<DpNode>& nodes, int a, int b) {
  if (nodes[a].count != nodes[b].count) return nodes[a].count < nodes[b].count;
  return materialize(nodes, a) < materialize(nodes, b);
}

}  // namespace

ItemSet solve_bruteforce(const AdditiveProfile& profile, int max_items) {
  require_valid(profile);
  const int m = profile.num_items();
  const int n = profile.num_agents();
  if (m > max_items || m > 62) {
    throw CapExceeded("brute force limited to " + std::to_string(std::min(max_items, 62)) +
                      " items, instance has " + std::to_string(m));
  }
  std::vector<std::int64_t> sums(n);
  for (int k = 0; k <= m; ++k) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        auto w = profile.weights(i);
        std::int64_t s = 0;
        for (int x : combo) s += w[x];
        ok = 2 * s >= profile.weight_total(i);
      }
      if (ok) return ItemSet::from_members(m, combo);
      int i = k - 1;
      while (i >= 0 && combo[i] == m - k + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int t = i + 1; t < k; ++t) combo[t] = combo[t - 1] + 1;
    }
  }
  throw std::logic_error("no agreeable set found; S always is");
}

DpResult solve_dp_detailed(const AdditiveProfile& profile, const DpLimits& limits) {
  require_valid(profile);
  if (!profile.is_integral()) {
    throw InvalidArgument("dynamic program requires integer utilities");
  }
  const int m = profile.num_items();
  const int n = profile.num_agents();
  if (n > limits.max_agents) {
    throw CapExceeded("dynamic program supports at most " +
                      std::to_string(limits.max_agents) + " agents, got " +
                      std::to_string(n));
  }
  long double cells = m + 1;
  for (int i = 0; i < n; ++i) cells *= static_cast<long double>(profile.weight_total(i)) + 1;
  if (cells > static_cast<long double>(limits.max_cells)) {
    throw CapExceeded("dynamic program table of ~" + std::to_string(static_cast<double>(cells)) +
                      " cells exceeds the cap of " + std::to_string(limits.max_cells));
  }

  std::vector<DpNode> nodes{{0, -1, -1}};
  std::unordered_map<std::vector<std::int64_t>, int, VectorHash> table;
  table.emplace(std::vector<std::int64_t>(n, 0), 0);
  std::vector<std::pair<std::vector<std::int64_t>, int>> snapshot;
  for (int item = 0; item < m; ++item) {
    snapshot.assign(table.begin(), table.end());
    for (auto& [key, id] : snapshot) {
      std::vector<std::int64_t> next = key;
      for (int i = 0; i < n; ++i) next[i] += profile.weights(i)[item];
      nodes.push_back({nodes[id].count + 1, id, item});
      const int candidate = static_cast<int>(nodes.size()) - 1;
      auto [it, inserted] = table.try_emplace(std::move(next), candidate);
      if (!inserted) {
        if (better(nodes, candidate, it->second)) {
          it->second = candidate;
        } else {
          nodes.pop_back();
        }
      }
    }
  }

  int best = -1;
  for (const auto& [key, id] : table) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = 2 * key[i] >= profile.weight_total(i);
    if (ok && (best < 0 || better(nodes, id, best))) best = id;
  }
  return {ItemSet::from_members(m, materialize(nodes, best)), table.size()};
}

ItemSet solve_dp(const AdditiveProfile& profile, const DpLimits& limits) {
  return solve_dp_detailed(profile, limits).set;
}

CoverMatrix build_cover_matrix(const AdditiveProfile& profile) {
  require_valid(profile);
  CoverMatrix matrix;
  matrix.num_items = profile.num_items();
  for (int i = 0; i < profile.num_agents(); ++i) {
    const Rational& total = profile.total(i);
    if (total == 0) {
      matrix.trivially_satisfied.push_back(i);
      continue;
    }
    std::vector<Rational> row;
    row.reserve(profile.num_items());
    for (const Rational& u : profile.row(i)) row.push_back(2 * u / total);
    matrix.agents.push_back(i);
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

ItemSet solve_greedy_cip(const AdditiveProfile& profile) {
  const CoverMatrix matrix = build_cover_matrix(profile);
  const int m = matrix.num_items;
  const size_t rows = matrix.rows.size();
  std::vector<Rational> deficit(rows, Rational(1));
  std::vector<bool> chosen(m, false);
  std::vector<int> picked;
  auto unmet = [&] {
    return std::any_of(deficit.begin(), deficit.end(), [](const Rational& d) { return d > 0; });
  };
  while (unmet()) {
    int best_item = -1;
    Rational best_gain = 0;
    for (int s = 0; s < m; ++s) {
      if (chosen[s]) continue;
      Rational gain = 0;
      for (size_t r = 0; r < rows; ++r) {
        if (deficit[r] > 0) gain += std::min(matrix.rows[r][s], deficit[r]);
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_item = s;
      }
    }
    if (best_item < 0) throw std::logic_error("greedy cover stalled; rows sum to 2");
    chosen[best_item] = true;
    picked.push_back(best_item);
    for (size_t r = 0; r < rows; ++r) deficit[r] -= matrix.rows[r][best_item];
  }
  return ItemSet::from_members(m, std::move(picked));
}

}  // namespace agreeable
