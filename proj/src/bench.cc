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

#include "agreeable/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "agreeable/additive_solver.h"
#include "agreeable/agreeability.h"
#include "agreeable/errors.h"
#include "agreeable/generators.h"
#include "agreeable/ordinal_solver.h"
#include "agreeable/oracle_solver.h"
#include "json.hpp"

namespace agreeable {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kOrdinalOptimumItems = 20;

std::shared_ptr<const SetFunction> as_set_function(const Instance& instance) {
  if (const auto* planted = std::get_if<PlantedOracle>(&instance)) {
    return std::make_shared<PlantedOracle>(*planted);
  }
  if (const auto* additive = std::get_if<AdditiveProfile>(&instance)) {
    return std::make_shared<AdditiveSetFunction>(*additive);
  }
  throw KindMismatch("ordinal instances have no value oracle");
}

AlgorithmRegistry make_default_registry() {
  using K = InstanceKind;
  AlgorithmRegistry registry;
  registry["ordinal-rand"] = {{K::kOrdinal}, [](const Instance& x, const SolveOptions& o) {
                                return AlgorithmOutput{
                                    solve_randomized(std::get<OrdinalProfile>(x), o.seed,
                                                     o.limits.resample_cap),
                                    std::nullopt, true};
                              }};
  registry["ordinal-det"] = {{K::kOrdinal}, [](const Instance& x, const SolveOptions& o) {
                               return AlgorithmOutput{
                                   solve_deterministic(std::get<OrdinalProfile>(x),
                                                       o.limits.max_deterministic_agents),
                                   std::nullopt, false};
                             }};
  registry["oracle-cover"] = {{K::kOraclePlanted, K::kAdditive},
                              [](const Instance& x, const SolveOptions& o) {
                                ValueOracle oracle(as_set_function(x));
                                OracleSolveResult r = solve_oracle_detailed(
                                    oracle, o.epsilon, o.limits.max_cover_blocks);
                                return AlgorithmOutput{r.set, r.queries.total, false};
                              }};
  registry["additive-dp"] = {{K::kAdditive}, [](const Instance& x, const SolveOptions& o) {
                               DpLimits limits{o.limits.max_dp_agents, o.limits.max_dp_cells};
                               return AlgorithmOutput{
                                   solve_dp(std::get<AdditiveProfile>(x), limits),
                                   std::nullopt, false};
                             }};
  registry["additive-greedy"] = {{K::kAdditive}, [](const Instance& x, const SolveOptions&) {
                                   return AlgorithmOutput{
                                       solve_greedy_cip(std::get<AdditiveProfile>(x)),
                                       std::nullopt, false};
                                 }};
  registry["brute"] = {{K::kOrdinal, K::kAdditive, K::kOraclePlanted},
                       [](const Instance& x, const SolveOptions& o) -> AlgorithmOutput {
                         const int cap = o.limits.max_brute_items;
                         if (const auto* ordinal = std::get_if<OrdinalProfile>(&x)) {
                           return {solve_ordinal_bruteforce(*ordinal, cap), std::nullopt, false};
                         }
                         if (const auto* additive = std::get_if<AdditiveProfile>(&x)) {
                           return {solve_bruteforce(*additive, cap), std::nullopt, false};
                         }
                         ValueOracle oracle(as_set_function(x));
                         ItemSet set = solve_oracle_bruteforce(oracle, cap);
                         return {set, oracle.report().total, false};
                       }};
  return registry;
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

const Json& field(const Json& object, const std::string& key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

long long integer_field(const Json& object, const std::string& key, const std::string& where) {
  const Json& v = field(object, key, where);
  if (!v.is_number_integer()) {
    throw ParseError(where + ": field '" + key + "' must be an integer");
  }
  return v.get<long long>();
}

BenchInstance generated_instance(const Json& request, const std::string& where) {
  const Json& kind = field(request, "generate", where);
  if (!kind.is_string()) throw ParseError(where + ": field 'generate' must be a string");
  const std::string name = kind.get<std::string>();
  if (name == "random-additive") {
    const auto m = integer_field(request, "items", where);
    const auto n = integer_field(request, "agents", where);
    const auto max_u = integer_field(request, "max_utility", where);
    const auto seed = integer_field(request, "seed", where);
    std::string id = "random-additive-m" + std::to_string(m) + "-n" + std::to_string(n) +
                     "-u" + std::to_string(max_u) + "-s" + std::to_string(seed);
    return {id, {gen_random_additive(static_cast<int>(m), static_cast<int>(n), max_u,
                                     static_cast<std::uint64_t>(seed)),
                 id, "generated"}};
  }
  if (name == "random-ordinal") {
    const auto m = integer_field(request, "items", where);
    const auto n = integer_field(request, "agents", where);
    const auto seed = integer_field(request, "seed", where);
    std::string id = "random-ordinal-m" + std::to_string(m) + "-n" + std::to_string(n) +
                     "-s" + std::to_string(seed);
    return {id, {gen_random_ordinal(static_cast<int>(m), static_cast<int>(n),
                                    static_cast<std::uint64_t>(seed)),
                 id, "generated"}};
  }
  if (name == "planted") {
    const auto m = integer_field(request, "items", where);
    const Json& planted = field(request, "planted", where);
    if (!planted.is_array()) throw ParseError(where + ": field 'planted' must be an array");
    std::vector<int> members = planted.get<std::vector<int>>();
    std::string id = "planted-m" + std::to_string(m) + "-t" + std::to_string(members.size());
    PlantedOracle oracle(static_cast<int>(m), ItemSet::from_external(static_cast<int>(m), members));
    return {id, {oracle, id, "generated"}};
  }
  throw ParseError(where + ": unknown generator '" + name + "'");
}

}  // namespace

const AlgorithmRegistry& default_registry() {
  static const AlgorithmRegistry registry = make_default_registry();
  return registry;
}

std::string csv_header() {
  return "instance,algorithm,set,size,optimum,ratio,queries,wall_ms,seed";
}

std::string emit_result(const SolveResult& r) {
  std::string out = csv_cell(r.instance);
  out += ',' + csv_cell(r.algorithm);
  out += ',' + r.set.to_string();
  out += ',' + std::to_string(r.size());
  out += ',' + (r.optimum ? std::to_string(*r.optimum) : std::string());
  out += ',' + (r.ratio ? format_double(*r.ratio, 6) : std::string());
  out += ',' + (r.queries ? std::to_string(*r.queries) : std::string());
  out += ',' + format_double(r.wall_ms, 3);
  out += ',' + (r.seed ? std::to_string(*r.seed) : std::string());
  return out;
}

std::string render_csv(const std::vector<SolveResult>& rows) {
  std::string out = csv_header() + "\n";
  for (const SolveResult& r : rows) out += emit_result(r) + "\n";
  return out;
}

bool audit_agreeable(const Instance& instance, const ItemSet& set) {
  if (set.universe() != num_items(instance)) return false;
  if (const auto* ordinal = std::get_if<OrdinalProfile>(&instance)) {
    return is_necessarily_agreeable(*ordinal, set);
  }
  if (const auto* additive = std::get_if<AdditiveProfile>(&instance)) {
    return is_agreeable_additive(*additive, set);
  }
  ValueOracle oracle(as_set_function(instance));
  return is_agreeable_oracle(oracle, set);
}

std::optional<int> known_optimum(const Instance& instance, const Limits& limits) {
  const int m = num_items(instance);
  if (const auto* planted = std::get_if<PlantedOracle>(&instance)) {
    return planted_optimum_size(*planted);
  }
  if (const auto* additive = std::get_if<AdditiveProfile>(&instance)) {
    if (m <= limits.max_brute_items && m <= 62) return solve_bruteforce(*additive, m).size();
    if (additive->is_integral()) {
      try {
        return solve_dp(*additive, {limits.max_dp_agents, limits.max_dp_cells}).size();
      } catch (const CapExceeded&) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }
  const auto& ordinal = std::get<OrdinalProfile>(instance);
  if (m <= std::min(limits.max_brute_items, kOrdinalOptimumItems)) {
    return solve_ordinal_bruteforce(ordinal, m).size();
  }
  return std::nullopt;
}

namespace {

const Algorithm& lookup(const AlgorithmRegistry& registry, std::string_view algorithm,
                        InstanceKind kind, std::string_view instance_id) {
  auto it = registry.find(algorithm);
  if (it == registry.end()) {
    throw InvalidArgument("unknown algorithm '" + std::string(algorithm) + "'");
  }
  const auto& accepts = it->second.accepts;
  if (std::find(accepts.begin(), accepts.end(), kind) == accepts.end()) {
    throw KindMismatch("algorithm '" + std::string(algorithm) + "' does not accept " +
                       std::string(kind_name(kind)) + " instance '" +
                       std::string(instance_id) + "'");
  }
  return it->second;
}

}  // namespace

SolveResult run_algorithm(const InstanceFile& file, std::string_view instance_id,
                          std::string_view algorithm, const SolveOptions& options,
                          std::optional<int> optimum, const AlgorithmRegistry& registry) {
  const Algorithm& algo = lookup(registry, algorithm, kind_of(file.instance), instance_id);
  const auto start = std::chrono::steady_clock::now();
  AlgorithmOutput output = algo.run(file.instance, options);
  const auto stop = std::chrono::steady_clock::now();

  SolveResult result;
  result.instance = std::string(instance_id);
  result.algorithm = std::string(algorithm);
  result.set = std::move(output.set);
  result.queries = output.queries;
  result.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  if (output.seeded) result.seed = options.seed;
  result.optimum = optimum;
  if (optimum) {
    if (*optimum > 0) {
      result.ratio = static_cast<double>(result.size()) / *optimum;
    } else if (result.size() == 0) {
      result.ratio = 1.0;
    }
  }
  return result;
}

BenchConfig parse_bench_config(std::string_view text, const std::filesystem::path& base_dir) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("bench config: ") + e.what());
  }
  const std::string where = "bench config";
  if (!root.is_object()) throw ParseError(where + ": top level must be an object");
  BenchConfig config;
  config.options.limits = Limits::from_environment();
  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string& key = it.key();
    if (key != "algorithms" && key != "instances" && key != "seed" && key != "epsilon" &&
        key != "optimum") {
      throw ParseError(where + ": unexpected field '" + key + "'");
    }
  }
  const Json& algorithms = field(root, "algorithms", where);
  if (!algorithms.is_array()) throw ParseError(where + ": 'algorithms' must be an array");
  for (const Json& a : algorithms) {
    if (!a.is_string()) throw ParseError(where + ": algorithm ids must be strings");
    config.algorithms.push_back(a.get<std::string>());
  }
  if (root.contains("seed")) {
    const long long seed = integer_field(root, "seed", where);
    if (seed < 0) throw ParseError(where + ": 'seed' must be nonnegative");
    config.options.seed = static_cast<std::uint64_t>(seed);
  }
  if (root.contains("epsilon")) {
    const Json& eps = root["epsilon"];
    if (eps.is_string()) {
      config.options.epsilon = parse_rational(eps.get<std::string>());
    } else if (eps.is_number_integer()) {
      config.options.epsilon = eps.get<long long>();
    } else {
      throw ParseError(where + ": 'epsilon' must be an integer or a rational string");
    }
  }
  if (root.contains("optimum")) {
    if (!root["optimum"].is_boolean()) throw ParseError(where + ": 'optimum' must be a boolean");
    config.compute_optimum = root["optimum"].get<bool>();
  }
  const Json& instances = field(root, "instances", where);
  if (!instances.is_array()) throw ParseError(where + ": 'instances' must be an array");
  for (size_t i = 0; i < instances.size(); ++i) {
    const Json& entry = instances[i];
    const std::string entry_where = where + ": instances[" + std::to_string(i) + "]";
    if (entry.is_string()) {
      std::filesystem::path path = entry.get<std::string>();
      if (path.is_relative()) path = base_dir / path;
      InstanceFile file = read_instance_file(path);
      std::string id = file.name.empty() ? path.stem().string() : file.name;
      config.instances.push_back({id, std::move(file)});
    } else if (entry.is_object() && entry.contains("generate")) {
      config.instances.push_back(generated_instance(entry, entry_where));
    } else if (entry.is_object()) {
      InstanceFile file = parse_instance(entry.dump());
      std::string id = file.name.empty() ? "instance-" + std::to_string(i + 1) : file.name;
      config.instances.push_back({id, std::move(file)});
    } else {
      throw ParseError(entry_where + ": expected a path, a generator or an inline instance");
    }
  }
  return config;
}

BenchOutcome run_bench(const BenchConfig& config, const AlgorithmRegistry& registry) {
  for (const BenchInstance& inst : config.instances) {
    for (const std::string& algo : config.algorithms) {
      lookup(registry, algo, kind_of(inst.file.instance), inst.id);
    }
  }
  BenchOutcome outcome;
  for (const BenchInstance& inst : config.instances) {
    std::optional<int> optimum;
    if (config.compute_optimum) optimum = known_optimum(inst.file.instance, config.options.limits);
    for (const std::string& algo : config.algorithms) {
      SolveResult row = run_algorithm(inst.file, inst.id, algo, config.options, optimum, registry);
      if (!audit_agreeable(inst.file.instance, row.set)) {
        outcome.audit_failures.push_back(inst.id + " / " + algo + ": set {" +
                                         row.set.to_string() + "} is not agreeable");
      }
      outcome.rows.push_back(std::move(row));
    }
  }
  return outcome;
}

}  // namespace agreeable
