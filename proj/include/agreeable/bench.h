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

#ifndef AGREEABLE_BENCH_H_
#define AGREEABLE_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agreeable/instance_io.h"
#include "agreeable/item_set.h"
#include "agreeable/limits.h"
#include "agreeable/rational.h"

namespace agreeable {

struct SolveOptions {
  std::uint64_t seed = 0;
  Rational epsilon = 1;
  Limits limits;
};

// What an algorithm hands back before the harness audits it.
struct AlgorithmOutput {
  ItemSet set;
  std::optional<std::int64_t> queries;  // oracle algorithms only
  bool seeded = false;
};

struct Algorithm {
  std::vector<InstanceKind> accepts;
  std::function<AlgorithmOutput(const Instance&, const SolveOptions&)> run;
};

using AlgorithmRegistry = std::map<std::string, Algorithm, std::less<>>;

// ordinal-rand, ordinal-det, oracle-cover, additive-dp, additive-greedy,
// brute. oracle-cover also accepts additive instances (through the
// normalized additive oracle); brute accepts every kind.
const AlgorithmRegistry& default_registry();

struct SolveResult {
  std::string instance;
  std::string algorithm;
  ItemSet set;
  std::optional<int> optimum;
  std::optional<double> ratio;
  std::optional<std::int64_t> queries;
  double wall_ms = 0;
  std::optional<std::uint64_t> seed;

  int size() const { return set.size(); }
};

// "instance,algorithm,set,size,optimum,ratio,queries,wall_ms,seed"
std::string csv_header();
// One CSV line (no newline) in header order. Sets are space-separated 1-based
// indices; absent optional fields are empty cells.
std::string emit_result(const SolveResult& result);

// Re-checks a set through the agreeability module: agreeable for additive and
// planted instances, necessarily agreeable for every ranking of an ordinal
// instance.
bool audit_agreeable(const Instance& instance, const ItemSet& set);

// Exact minimum size when it can be computed within the limits.
std::optional<int> known_optimum(const Instance& instance, const Limits& limits);

// Throws InvalidArgument for an unknown algorithm and KindMismatch when the
// algorithm does not accept the instance kind. `optimum` fills the optimum
// and ratio columns.
SolveResult run_algorithm(const InstanceFile& file, std::string_view instance_id,
                          std::string_view algorithm, const SolveOptions& options,
                          std::optional<int> optimum = std::nullopt,
                          const AlgorithmRegistry& registry = default_registry());

struct BenchInstance {
  std::string id;
  InstanceFile file;
};

struct BenchConfig {
  std::vector<BenchInstance> instances;
  std::vector<std::string> algorithms;
  SolveOptions options;
  bool compute_optimum = true;
};

// JSON bench configuration:
//
//   {"algorithms": ["additive-dp", "additive-greedy", "brute"],
//    "seed": 1, "epsilon": "1", "optimum": true,
//    "instances": [
//      "relative/or/absolute/path.json",
//      {"generate": "random-additive", "items": 12, "agents": 3,
//       "max_utility": 9, "seed": 4},
//      {"generate": "random-ordinal", "items": 50, "agents": 2, "seed": 1},
//      {"generate": "planted", "items": 16, "planted": [1]},
//      {"format": "agreeable-instance", ...inline instance...}]}
//
// Paths resolve against base_dir. Limits come from the environment.
BenchConfig parse_bench_config(std::string_view text, const std::filesystem::path& base_dir);

struct BenchOutcome {
  std::vector<SolveResult> rows;
  // One message per emitted set that failed the audit.
  std::vector<std::string> audit_failures;

  int exit_code() const { return audit_failures.empty() ? 0 : 1; }
};

// Runs every (instance, algorithm) cell in instance-major order. Every
// algorithm id and kind pairing is checked before anything runs.
BenchOutcome run_bench(const BenchConfig& config,
                       const AlgorithmRegistry& registry = default_registry());

std::string render_csv(const std::vector<SolveResult>& rows);

}  // namespace agreeable

#endif  // AGREEABLE_BENCH_H_
