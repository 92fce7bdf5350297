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

// Separating neighborhoods for disjoint closed sets and the piecewise-linear
// functions that witness complete regularity.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hybridline/cover.hpp"
#include "hybridline/random.hpp"

namespace hybridline {

struct SepNbhd {
  Rational center;
  // Least n whose 1/n neighborhood of the center misses the other set.
  Integer n_of_c;
  // The 1/(2n) neighborhood, or {c} for isolated centers.
  RSet set;
};

// Throws NoFiniteN when no n <= 2^64 works, which happens exactly when c is
// in the closure of `other`; PreconditionError when c is in `other`.
SepNbhd sep_nbhd(const Cover& c, const Rational& center, const RSet& other);

struct NormalityReport {
  // Set when C0 and C1 meet; no pairs are checked then.
  std::optional<Rational> overlap;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<Rational, Rational>> intersecting;
  // Samples whose neighborhood could not be built.
  std::vector<std::string> errors;

  bool ok() const { return !overlap && intersecting.empty() && errors.empty(); }
};

NormalityReport check_normality(const Cover& c, const RSet& c0, const RSet& c1, const std::vector<Rational>& samples0,
                                const std::vector<Rational>& samples1);

// Members of s drawn at random together with every finite span end that s
// contains.
std::vector<Rational> sample_with_boundary(const RSet& s, SplitMix64& rng, std::size_t count);

// Two disjoint sets, each closed in the cover's topology, built from
// intervals that may share endpoints.
std::pair<RSet, RSet> fuzz_closed_pair(const Cover& c, SplitMix64& rng);

struct UrysohnSpec {
  Rational x;
  Label label = Label::kTwoSided;
  Rational epsilon;
  RSet excluded;
};

// Largest 2^-k (k = 0..64) whose basic neighborhood of x misses E.
Rational choose_epsilon(const Cover& c, const Rational& x, const RSet& excluded);

// Uses choose_epsilon unless epsilon is given; throws SpecInvalid when the
// neighborhood meets E.
UrysohnSpec make_urysohn(const Cover& c, const Rational& x, const RSet& excluded,
                         std::optional<Rational> epsilon = std::nullopt);

// Throws SpecInvalid unless the spec's neighborhood misses E.
void validate_urysohn(const UrysohnSpec& spec);
Rational urysohn_eval(const UrysohnSpec& spec, const Rational& t);

struct ContinuityFailure {
  Rational t;
  std::uint64_t tolerance_exponent;
};

// For each t and each tolerance 2^-k (k <= max_tolerance), looks for a basic
// neighborhood of t on which `samples_per_nbhd` sampled points stay within the
// tolerance of f(t).
std::vector<ContinuityFailure> check_continuity(const Cover& c, const UrysohnSpec& spec,
                                                const std::vector<Rational>& points, std::uint64_t max_tolerance,
                                                SplitMix64& rng, std::size_t samples_per_nbhd = 50);

}  // namespace hybridline
