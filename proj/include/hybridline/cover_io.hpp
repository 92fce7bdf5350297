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

// Cover files and randomly generated covers.
//
// File format:
//   {"breakpoints": ["p/q", ...], "piece_labels": [int, ...],
//    "point_overrides": [["p/q", int], ...],
//    "gen_overrides": [[{"a": "p/q", "c": "p/q", "r": "p/q", "k0": int}, int], ...]}

#include <cstdint>
#include <string>
#include <string_view>

#include "hybridline/cover.hpp"

namespace hybridline {

// Throws ParseError naming the line or field at fault.
FourCover parse_cover_spec(std::string_view json_text);
// Parses and validates; OverlapError propagates from validation.
Cover parse_cover(std::string_view json_text);
Cover load_cover(const std::string& path_or_preset);
std::string serialize_cover(const FourCover& spec);

struct FuzzSpec {
  std::uint64_t max_breakpoints = 4;
  std::uint64_t max_point_overrides = 3;
  std::uint64_t max_gen_overrides = 2;
  std::uint64_t seed = 0;
};

// Always returns a cover that passes validate_cover.
FourCover fuzz_cover(const FuzzSpec& spec);

}  // namespace hybridline
