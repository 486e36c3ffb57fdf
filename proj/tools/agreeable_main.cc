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

// Batch command-line front end:
//
//   agreeable solve --algo ALGO --input F [--seed N] [--epsilon R] [--out F]
//   agreeable check --input F --set "1 3 4" [--necessary]
//   agreeable gen random-additive --items M --agents N --max-utility U --seed S
//   agreeable gen random-ordinal --items M --agents N --seed S
//   agreeable gen planted --items M --planted "1 2"
//   agreeable gen from-partition --input F [--pad-zeros]
//   agreeable gen from-3sat --input F.cnf
//   agreeable gen from-setcover --input F
//   agreeable bench --config F [--out F]
//
// Exit status: 0 on success, 1 when an output set fails the agreeability audit
// (or `check` finds the set not agreeable), 2 on usage, parse or cap errors.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "agreeable/agreeability.h"
#include "agreeable/bench.h"
#include "agreeable/errors.h"
#include "agreeable/generators.h"
#include "agreeable/instance_io.h"
#include "agreeable/reductions.h"

namespace {

using namespace agreeable;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

int run_solve(const std::string& input, const std::string& algo, std::uint64_t seed,
              const std::string& epsilon, const std::string& out_path) {
  InstanceFile file = read_instance_file(input);
  SolveOptions options;
  options.seed = seed;
  options.epsilon = parse_rational(epsilon);
  options.limits = Limits::from_environment();
  const std::string id =
      file.name.empty() ? std::filesystem::path(input).stem().string() : file.name;
  SolveResult result = run_algorithm(file, id, algo, options);
  emit(render_csv({result}), out_path);
  if (!audit_agreeable(file.instance, result.set)) {
    std::cerr << "audit: set {" << result.set.to_string() << "} is not agreeable\n";
    return 1;
  }
  return 0;
}

int run_check(const std::string& input, const std::string& set_text, bool necessary) {
  InstanceFile file = read_instance_file(input);
  const ItemSet set = parse_item_set(num_items(file.instance), set_text);
  const InstanceKind kind = kind_of(file.instance);
  if (necessary && kind != InstanceKind::kOrdinal) {
    throw KindMismatch("--necessary needs an ordinal instance, got " +
                       std::string(kind_name(kind)));
  }
  bool all = true;
  if (const auto* ordinal = std::get_if<OrdinalProfile>(&file.instance)) {
    for (int j = 0; j < ordinal->num_agents(); ++j) {
      auto deficits = necessary_agreeability_deficits(ordinal->ranking(j), set);
      std::cout << "agent " << j + 1 << ": "
                << (deficits.empty() ? "necessarily agreeable" : "not necessarily agreeable");
      for (const PrefixDeficit& d : deficits) {
        std::cout << " (k=" << d.k << ", deficit " << to_string(d.deficit) << ")";
      }
      std::cout << "\n";
      all = all && deficits.empty();
    }
  } else if (const auto* additive = std::get_if<AdditiveProfile>(&file.instance)) {
    for (int i = 0; i < additive->num_agents(); ++i) {
      const bool ok = is_agreeable_additive(*additive, i, set);
      std::cout << "agent " << i + 1 << ": " << (ok ? "agreeable" : "not agreeable")
                << " (" << to_string(additive->value(i, set)) << " of "
                << to_string(additive->total(i)) << ")\n";
      all = all && ok;
    }
  } else {
    all = audit_agreeable(file.instance, set);
    std::cout << "agent 1: " << (all ? "agreeable" : "not agreeable") << "\n";
  }
  std::cout << (all ? "agreeable" : "not agreeable") << "\n";
  return all ? 0 : 1;
}

int run_bench_command(const std::string& config_path, const std::string& out_path) {
  BenchConfig config = parse_bench_config(read_text_file(config_path),
                                          std::filesystem::path(config_path).parent_path());
  BenchOutcome outcome = run_bench(config);
  emit(render_csv(outcome.rows), out_path);
  for (const std::string& failure : outcome.audit_failures) {
    std::cerr << "audit: " << failure << "\n";
  }
  return outcome.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum agreeable item sets: solvers, checkers and instance generators"};
  app.require_subcommand(1);

  std::string input, output, algo, epsilon = "1", set_text, config;
  std::uint64_t seed = 0;
  bool necessary = false;

  auto* solve = app.add_subcommand("solve", "Run one algorithm on an instance file");
  solve->add_option("--algo", algo, "ordinal-rand|ordinal-det|oracle-cover|additive-dp|"
                                    "additive-greedy|brute")
      ->required();
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--seed", seed, "Seed for ordinal-rand");
  solve->add_option("--epsilon", epsilon, "Epsilon for oracle-cover (rational)");
  solve->add_option("--out", output, "Write the CSV here instead of stdout");

  auto* check = app.add_subcommand("check", "Check whether a set is agreeable");
  check->add_option("--input", input, "Instance file")->required();
  check->add_option("--set", set_text, "1-based items, e.g. \"1 3 4\"")->required();
  check->add_flag("--necessary", necessary, "Necessary agreeability (ordinal instances)");

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->require_subcommand(1);
  int items = 0, agents = 0;
  std::int64_t max_utility = 0;
  std::string planted, name;
  bool pad_zeros = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", output, "Write the instance here instead of stdout");
    cmd->add_option("--name", name, "Instance name");
  };
  auto* gen_additive = gen->add_subcommand("random-additive", "I.i.d. uniform integer utilities");
  gen_additive->add_option("--items", items)->required();
  gen_additive->add_option("--agents", agents)->required();
  gen_additive->add_option("--max-utility", max_utility)->required();
  gen_additive->add_option("--seed", seed)->required();
  add_common(gen_additive);
  auto* gen_ordinal = gen->add_subcommand("random-ordinal", "Uniformly random rankings");
  gen_ordinal->add_option("--items", items)->required();
  gen_ordinal->add_option("--agents", agents)->required();
  gen_ordinal->add_option("--seed", seed)->required();
  add_common(gen_ordinal);
  auto* gen_planted = gen->add_subcommand("planted", "Threshold oracle with a planted set");
  gen_planted->add_option("--items", items)->required();
  gen_planted->add_option("--planted", planted, "1-based items; omit for the plain threshold");
  add_common(gen_planted);
  auto* gen_partition =
      gen->add_subcommand("from-partition", "Two-agent instance from a balanced partition");
  gen_partition->add_option("--input", input, "One integer per line")->required();
  gen_partition->add_flag("--pad-zeros", pad_zeros,
                          "Treat the input as plain 2-partition and append |B| zeros first");
  add_common(gen_partition);
  auto* gen_sat = gen->add_subcommand("from-3sat", "Instance from a DIMACS CNF formula");
  gen_sat->add_option("--input", input, "DIMACS CNF file")->required();
  add_common(gen_sat);
  auto* gen_cover = gen->add_subcommand("from-setcover", "Instance from a set cover instance");
  gen_cover->add_option("--input", input, "One subset per line")->required();
  add_common(gen_cover);

  auto* bench = app.add_subcommand("bench", "Run a benchmark configuration, emit CSV");
  bench->add_option("--config", config, "Bench configuration JSON")->required();
  bench->add_option("--out", output, "Write the CSV here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(input, algo, seed, epsilon, output);
    if (*check) return run_check(input, set_text, necessary);
    if (*bench) return run_bench_command(config, output);

    std::optional<InstanceFile> file;
    if (*gen_additive) {
      file = InstanceFile{gen_random_additive(items, agents, max_utility, seed), name,
                          "random-additive seed=" + std::to_string(seed)};
    } else if (*gen_ordinal) {
      file = InstanceFile{gen_random_ordinal(items, agents, seed), name,
                          "random-ordinal seed=" + std::to_string(seed)};
    } else if (*gen_planted) {
      file = InstanceFile{PlantedOracle(items, parse_item_set(items, planted)), name, "planted"};
    } else if (*gen_partition) {
      PartitionInstance a = parse_partition_list(read_text_file(input));
      if (pad_zeros) a = balanced_from_2partition(a);
      file = InstanceFile{from_partition(a), name,
                          std::string(pad_zeros ? "from-2partition " : "from-partition ") + input};
    } else if (*gen_sat) {
      CnfFormula phi = preprocess_clauses(parse_dimacs(read_text_file(input)));
      file = InstanceFile{from_3sat(phi), name, "from-3sat " + input};
    } else if (*gen_cover) {
      file = InstanceFile{from_setcover(parse_setcover_list(read_text_file(input))), name,
                          "from-setcover " + input};
    }
    emit(emit_instance(*file), output);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
