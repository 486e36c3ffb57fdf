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

#ifndef AGREEABLE_INSTANCE_IO_H_
#define AGREEABLE_INSTANCE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "agreeable/instance.h"
#include "agreeable/oracle_solver.h"
#include "agreeable/reductions.h"

namespace agreeable {

using Instance = std::variant<OrdinalProfile, AdditiveProfile, PlantedOracle>;

enum class InstanceKind { kOrdinal, kAdditive, kOraclePlanted };

// "ordinal", "additive", "oracle-planted".
std::string_view kind_name(InstanceKind kind);
InstanceKind kind_of(const Instance& instance);
int num_items(const Instance& instance);

struct InstanceFile {
  Instance instance;
  std::string name;
  std::string provenance;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

inline constexpr std::string_view kInstanceFormat = "agreeable-instance";
inline constexpr int kInstanceVersion = 1;

// UTF-8 JSON instance file:
//
//   {"format": "agreeable-instance", "version": 1, "kind": "additive",
//    "name": "...", "provenance": "...",            (both optional)
//    "items": 3, "agents": 2, "utilities": [[1, 2, 3], [0, "1/2", 4]]}
//
// "ordinal" carries "items" and "rankings" (1-based, most preferred first);
// "oracle-planted" carries "items" and "planted" (1-based, empty for the
// plain threshold function). Utilities are JSON integers or "p/q" strings;
// JSON floats are rejected. Fields foreign to the kind are errors. The
// payload is validated; every failure is a ParseError naming the field or the
// line and column.
InstanceFile parse_instance(std::string_view text);
std::string emit_instance(const InstanceFile& file);

InstanceFile read_instance_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// One integer per line; blank lines and lines starting with '#' are skipped.
PartitionInstance parse_partition_list(std::string_view text);

// DIMACS CNF: 'c' comment lines, one "p cnf <vars> <clauses>" header,
// zero-terminated clauses possibly spanning lines, optional '%' end marker.
CnfFormula parse_dimacs(std::string_view text);

// One subset per line as space-separated 1-based elements. An optional first
// directive "universe N" fixes the ground set; otherwise it is 1..max element.
// A line holding only '-' is the empty subset. '#' starts a comment line.
SetCoverInstance parse_setcover_list(std::string_view text);

}  // namespace agreeable

#endif  // AGREEABLE_INSTANCE_IO_H_
