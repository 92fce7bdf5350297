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

// Four-way labelled partitions of the line and the hybrid topology they
// determine. Label 1 points get two-sided neighborhoods, label 2 points are
// isolated, label 3 points get [x, x+e) and label 4 points get (x-e, x].

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hybridline/exactsets.hpp"

namespace hybridline {

enum class Label : int { kTwoSided = 1, kIsolated = 2, kRight = 3, kLeft = 4 };

inline int to_int(Label l) { return static_cast<int>(l); }
// Throws PreconditionError outside 1..4.
Label label_from_int(long v);

struct FourCover {
  std::vector<Rational> breakpoints;
  // Interleaved: piece (-inf,b1), {b1}, (b1,b2), ..., {bm}, (bm,inf).
  std::vector<Label> piece_labels;
  std::vector<std::pair<Rational, Label>> point_overrides;
  std::vector<std::pair<SeqGen, Label>> gen_overrides;

  friend bool operator==(const FourCover&, const FourCover&) = default;
};

struct LocalBaseNbhd {
  Rational center;
  Label label;
  Rational radius;
  RSet set;
};

class Cover {
 public:
  const FourCover& spec() const { return spec_; }
  Label label_of(const Rational& x) const;
  // The part A_L as an exact set.
  const RSet& region(Label l) const { return regions_[static_cast<std::size_t>(to_int(l) - 1)]; }

  LocalBaseNbhd local_base_nbhd(const Rational& x, const Rational& radius) const;
  // Closure in the hybrid topology.
  RSet closure(const RSet& s) const;
  // Smallest k <= max_k with the radius-2^-k neighborhood of x inside s.
  std::optional<std::uint64_t> open_level(const RSet& s, const Rational& x, std::uint64_t max_k) const;

 private:
  friend Cover validate_cover(FourCover spec);
  FourCover spec_;
  std::array<RSet, 4> regions_;
};

// Throws OverlapError listing every violation, or PreconditionError when the
// shape of the spec is wrong (label count, unsorted breakpoints).
Cover validate_cover(FourCover spec);

inline Label label_of(const Cover& c, const Rational& x) { return c.label_of(x); }
inline const RSet& region(const Cover& c, Label l) { return c.region(l); }
inline LocalBaseNbhd local_base_nbhd(const Cover& c, const Rational& x, const Rational& radius) {
  return c.local_base_nbhd(x, radius);
}

// True when every sample has a basic neighborhood of radius 2^-k (k <= 64)
// inside s. Throws SearchExhausted for a sample with no such radius and
// PreconditionError for a sample outside s.
bool is_open_sampled(const Cover& c, const RSet& s, const std::vector<Rational>& samples);

// Named covers: real-line, sorgenfrey, sorgenfrey-left, hattori.
std::vector<std::string> preset_names();
// Throws PreconditionError for an unknown name.
FourCover preset(const std::string& name);

}  // namespace hybridline
