// Copyright 2026 The hybridline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The property-suite runner behind `hybridline check`. Reports are JSON lines
// with the fields suite, cover_id, check, witness and status.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hybridline/cover.hpp"

namespace hybridline {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms",    "balls",   "topology",  "decomposition",
                                                 "normality", "urysohn", "extractor", "all"};
  return names;
}

struct SuiteConfig {
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::uint64_t samples = 200;
  std::uint64_t levels = 24;
  // Cap for bounded searches.
  std::uint64_t max_level = 64;
  // Negative control: swaps in a broken decomposition and tampered balls.
  bool corrupt = false;
};

struct SuiteResult {
  std::vector<std::string> records;
  std::size_t violations = 0;

  int exit_code() const { return violations == 0 ? 0 : 1; }
};

struct NamedCover {
  std::string id;
  Cover cover;
};

SuiteResult run_suite(const SuiteConfig& cfg, const std::vector<NamedCover>& covers);

// HYBRIDLINE_MAX_LEVEL, or 64 when unset. Throws ParseError when malformed.
std::uint64_t env_max_level();

}  // namespace hybridline
