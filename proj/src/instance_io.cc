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

#include "agreeable/instance_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "agreeable/errors.h"
#include "json.hpp"

namespace agreeable {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ParseError("field '" + field + "': " + message);
}

const Json& require(const Json& object, const std::string& key) {
  auto it = object.find(key);
  if (it == object.end()) fail(key, "missing");
  return *it;
}

int require_count(const Json& object, const std::string& key) {
  const Json& value = require(object, key);
  if (!value.is_number_integer() || value.get<long long>() < 1 ||
      value.get<long long>() > 1'000'000'000) {
    fail(key, "expected a positive integer");
  }
  return value.get<int>();
}

std::vector<int> int_list(const Json& value, const std::string& field) {
  if (!value.is_array()) fail(field, "expected an array of integers");
  std::vector<int> out;
  for (size_t i = 0; i < value.size(); ++i) {
    const Json& x = value[i];
    if (!x.is_number_integer()) {
      fail(field + "[" + std::to_string(i) + "]", "expected an integer");
    }
    const long long v = x.get<long long>();
    if (v < -1'000'000'000LL || v > 1'000'000'000LL) {
      fail(field + "[" + std::to_string(i) + "]", "out of range");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

Rational parse_utility(const Json& x, const std::string& field) {
  if (x.is_number_integer()) {
    return x.is_number_unsigned() ? Rational(x.get<std::uint64_t>())
                                  : Rational(x.get<std::int64_t>());
  }
  if (x.is_string()) {
    try {
      return parse_rational(x.get<std::string>());
    } catch (const ParseError& e) {
      fail(field, e.what());
    }
  }
  if (x.is_number_float()) {
    fail(field, "binary floating point is not accepted; write an integer or a \"p/q\" string");
  }
  fail(field, "expected an integer or a \"p/q\" string");
}

Json utility_json(const Rational& u) {
  if (is_integer(u)) {
    const BigInt v = boost::multiprecision::numerator(u);
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
      return v.convert_to<std::int64_t>();
    }
  }
  return to_string(u);
}

std::string row_text(const Json& row) {
  std::string out = "[";
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += row[i].dump();
  }
  return out + "]";
}

std::string matrix_text(const Json& rows) {
  if (rows.empty()) return "[]";
  std::string out = "[\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    out += "    " + row_text(rows[i]);
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  return out + "  ]";
}

void check_keys(const Json& root, const std::string& kind,
                const std::set<std::string>& allowed) {
  static const std::set<std::string> common = {"format", "version", "kind", "name",
                                               "provenance"};
  for (auto it = root.begin(); it != root.end(); ++it) {
    if (!common.count(it.key()) && !allowed.count(it.key())) {
      fail(it.key(), "unexpected for kind '" + kind + "'");
    }
  }
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

[[noreturn]] void fail_line(const std::string& what, size_t line, const std::string& message) {
  throw ParseError(what + " line " + std::to_string(line) + ": " + message);
}

long long parse_integer_token(const std::string& token, const std::string& what, size_t line) {
  size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) fail_line(what, line, "'" + token + "' is not an integer");
  return value;
}

}  // namespace

std::string_view kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kOrdinal:
      return "ordinal";
    case InstanceKind::kAdditive:
      return "additive";
    case InstanceKind::kOraclePlanted:
      return "oracle-planted";
  }
  return "unknown";
}

InstanceKind kind_of(const Instance& instance) {
  return static_cast<InstanceKind>(instance.index());
}

int num_items(const Instance& instance) {
  return std::visit([](const auto& x) { return x.num_items(); }, instance);
}

InstanceFile parse_instance(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("instance JSON: top level must be an object");
  const Json& format = require(root, "format");
  if (!format.is_string() || format.get<std::string>() != kInstanceFormat) {
    fail("format", "expected \"" + std::string(kInstanceFormat) + "\"");
  }
  const Json& version = require(root, "version");
  if (!version.is_number_integer() || version.get<int>() != kInstanceVersion) {
    fail("version", "unsupported version, expected " + std::to_string(kInstanceVersion));
  }
  const Json& kind_json = require(root, "kind");
  if (!kind_json.is_string()) fail("kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();

  std::string name, provenance;
  if (auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) fail("name", "expected a string");
    name = it->get<std::string>();
  }
  if (auto it = root.find("provenance"); it != root.end()) {
    if (!it->is_string()) fail("provenance", "expected a string");
    provenance = it->get<std::string>();
  }

  if (kind == "ordinal") {
    check_keys(root, kind, {"items", "agents", "rankings"});
    const int m = require_count(root, "items");
    const Json& rankings = require(root, "rankings");
    if (!rankings.is_array() || rankings.empty()) {
      fail("rankings", "expected a nonempty array of rankings");
    }
    std::vector<std::vector<int>> rows;
    for (size_t j = 0; j < rankings.size(); ++j) {
      rows.push_back(int_list(rankings[j], "rankings[" + std::to_string(j) + "]"));
    }
    if (root.contains("agents") && require_count(root, "agents") != static_cast<int>(rows.size())) {
      fail("agents", "does not match the number of rankings");
    }
    OrdinalProfile profile = OrdinalProfile::from_external(m, rows);
    ValidationReport report = validate_ordinal_profile(profile);
    if (!report.empty()) fail("rankings", "not strict rankings: " + describe(report));
    return {std::move(profile), name, provenance};
  }
  if (kind == "additive") {
    check_keys(root, kind, {"items", "agents", "utilities"});
    const Json& utilities = require(root, "utilities");
    if (!utilities.is_array() || utilities.empty()) {
      fail("utilities", "expected a nonempty array of rows");
    }
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < utilities.size(); ++i) {
      const std::string row_field = "utilities[" + std::to_string(i) + "]";
      const Json& row = utilities[i];
      if (!row.is_array() || row.empty()) fail(row_field, "expected a nonempty array");
      std::vector<Rational> parsed;
      for (size_t j = 0; j < row.size(); ++j) {
        parsed.push_back(parse_utility(row[j], row_field + "[" + std::to_string(j) + "]"));
      }
      if (!rows.empty() && parsed.size() != rows.front().size()) {
        fail(row_field, "has " + std::to_string(parsed.size()) + " entries, expected " +
                            std::to_string(rows.front().size()));
      }
      rows.push_back(std::move(parsed));
    }
    if (root.contains("items") &&
        require_count(root, "items") != static_cast<int>(rows.front().size())) {
      fail("items", "does not match the utility rows");
    }
    if (root.contains("agents") && require_count(root, "agents") != static_cast<int>(rows.size())) {
      fail("agents", "does not match the number of utility rows");
    }
    AdditiveProfile profile = [&] {
      try {
        return AdditiveProfile(std::move(rows));
      } catch (const InvalidArgument& e) {
        fail("utilities", e.what());
      }
    }();
    ValidationReport report = validate_additive_profile(profile);
    if (!report.empty()) fail("utilities", describe(report));
    return {std::move(profile), name, provenance};
  }
  if (kind == "oracle-planted") {
    check_keys(root, kind, {"items", "planted"});
    const int m = require_count(root, "items");
    std::vector<int> planted = int_list(require(root, "planted"), "planted");
    try {
      return {PlantedOracle(m, ItemSet::from_external(m, planted)), name, provenance};
    } catch (const InvalidArgument& e) {
      fail("planted", e.what());
    }
  }
  fail("kind", "unknown kind '" + kind + "'");
}

std::string emit_instance(const InstanceFile& file) {
  std::vector<std::pair<std::string, std::string>> fields;
  auto add = [&](const std::string& key, const Json& value) { fields.emplace_back(key, value.dump()); };
  add("format", std::string(kInstanceFormat));
  add("version", kInstanceVersion);
  add("kind", std::string(kind_name(kind_of(file.instance))));
  if (!file.name.empty()) add("name", file.name);
  if (!file.provenance.empty()) add("provenance", file.provenance);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OrdinalProfile>) {
          add("items", x.num_items());
          add("agents", x.num_agents());
          Json rows = Json::array();
          for (int j = 0; j < x.num_agents(); ++j) {
            Json row = Json::array();
            for (int item : x.ranking(j)) row.push_back(item + 1);
            rows.push_back(row);
          }
          fields.emplace_back("rankings", matrix_text(rows));
        } else if constexpr (std::is_same_v<T, AdditiveProfile>) {
          add("items", x.num_items());
          add("agents", x.num_agents());
          Json rows = Json::array();
          for (int i = 0; i < x.num_agents(); ++i) {
            Json row = Json::array();
            for (const Rational& u : x.row(i)) row.push_back(utility_json(u));
            rows.push_back(row);
          }
          fields.emplace_back("utilities", matrix_text(rows));
        } else {
          add("items", x.num_items());
          fields.emplace_back("planted", row_text(Json(x.planted().external())));
        }
      },
      file.instance);
  std::string out = "{\n";
  for (size_t i = 0; i < fields.size(); ++i) {
    out += "  " + Json(fields[i].first).dump() + ": " + fields[i].second;
    out += i + 1 < fields.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << text;
}

InstanceFile read_instance_file(const std::filesystem::path& path) {
  try {
    return parse_instance(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

PartitionInstance parse_partition_list(std::string_view text) {
  PartitionInstance out;
  std::vector<std::string> lines = lines_of(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    std::string token;
    if (!(in >> token) || token.front() == '#') continue;
    out.values.push_back(parse_integer_token(token, "partition", i + 1));
    if (in >> token) fail_line("partition", i + 1, "expected one integer per line");
  }
  return out;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula formula;
  bool have_header = false;
  long long declared_clauses = 0;
  std::vector<int> current;
  std::vector<std::string> lines = lines_of(text);
  size_t last_line = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    std::string token;
    if (!(in >> token)) continue;
    if (token == "c") continue;
    if (token == "%") break;
    if (token == "p") {
      std::string format;
      long long vars = -1, clauses = -1;
      if (have_header) fail_line("DIMACS", i + 1, "second problem line");
      if (!(in >> format >> vars >> clauses) || format != "cnf" || vars < 0 || clauses < 0) {
        fail_line("DIMACS", i + 1, "expected 'p cnf <variables> <clauses>'");
      }
      have_header = true;
      formula.num_vars = static_cast<int>(vars);
      declared_clauses = clauses;
      continue;
    }
    if (!have_header) fail_line("DIMACS", i + 1, "clause before the 'p cnf' line");
    do {
      const long long lit = parse_integer_token(token, "DIMACS", i + 1);
      if (lit == 0) {
        formula.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::llabs(lit) > formula.num_vars) {
          fail_line("DIMACS", i + 1, "literal " + token + " exceeds the declared variables");
        }
        current.push_back(static_cast<int>(lit));
      }
    } while (in >> token);
    last_line = i + 1;
  }
  if (!have_header) throw ParseError("DIMACS: missing 'p cnf' line");
  if (!current.empty()) fail_line("DIMACS", last_line, "last clause is not terminated by 0");
  if (static_cast<long long>(formula.clauses.size()) != declared_clauses) {
    throw ParseError("DIMACS: header declares " + std::to_string(declared_clauses) +
                     " clauses, found " + std::to_string(formula.clauses.size()));
  }
  return formula;
}

SetCoverInstance parse_setcover_list(std::string_view text) {
  SetCoverInstance out;
  int declared = 0;
  int max_element = 0;
  bool seen_subset = false;
  std::vector<std::string> lines = lines_of(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    std::string token;
    if (!(in >> token) || token.front() == '#') continue;
    if (token == "universe") {
      if (seen_subset || declared) fail_line("set cover", i + 1, "'universe' must come first");
      std::string count;
      if (!(in >> count)) fail_line("set cover", i + 1, "expected 'universe N'");
      const long long n = parse_integer_token(count, "set cover", i + 1);
      if (n < 1) fail_line("set cover", i + 1, "universe must be positive");
      declared = static_cast<int>(n);
      continue;
    }
    seen_subset = true;
    std::vector<int> subset;
    if (token != "-") {
      do {
        const long long e = parse_integer_token(token, "set cover", i + 1);
        if (e < 1 || (declared && e > declared)) {
          fail_line("set cover", i + 1, "element " + token + " outside the ground set");
        }
        subset.push_back(static_cast<int>(e));
        max_element = std::max(max_element, static_cast<int>(e));
      } while (in >> token);
    } else if (in >> token) {
      fail_line("set cover", i + 1, "'-' must stand alone");
    }
    out.subsets.push_back(std::move(subset));
  }
  out.universe_size = declared ? declared : max_element;
  return out;
}

}  // namespace agreeable
