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

#include "agreeable/limits.h"

#include <cstdlib>
#include <string>

#include "agreeable/errors.h"

namespace agreeable {
namespace {

template <typename T>
void override_from(const char* name, T& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::string text(raw);
  size_t used = 0;
  unsigned long long value = 0;
  try {
    if (text.front() == '-') throw std::invalid_argument("negative");
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value == 0) {
    throw InvalidArgument(std::string(name) + " must be a positive integer, got '" +
                          text + "'");
  }
  field = static_cast<T>(value);
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  override_from("AGREEABLE_MAX_BRUTE_ITEMS", limits.max_brute_items);
  override_from("AGREEABLE_MAX_DP_AGENTS", limits.max_dp_agents);
  override_from("AGREEABLE_MAX_DP_CELLS", limits.max_dp_cells);
  override_from("AGREEABLE_MAX_COVER_BLOCKS", limits.max_cover_blocks);
  override_from("AGREEABLE_RESAMPLE_CAP", limits.resample_cap);
  override_from("AGREEABLE_MAX_DETERMINISTIC_AGENTS", limits.max_deterministic_agents);
  return limits;
}

}  // namespace agreeable
