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

// The interior-preserving base levels behind the quasi-metric.
//
// Level i of the base is the family e(i). The minimal neighborhood of x in a
// family is the intersection of its members containing x (the whole line when
// none does), and M_n(x) intersects those over e(0..n).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hybridline/decompose.hpp"

namespace hybridline {

// q(0) = 0, q(2m-1) = cw(m), q(2m) = -cw(m) where cw walks the Calkin-Wilf
// sequence 1, 1/2, 2, 1/3, 3/2, ...
class RationalEnum {
 public:
  static Rational at(std::uint64_t i);
  static Rational calkin_wilf(std::uint64_t m);
  // Inverse of at(); the index can be astronomically large.
  static Integer index_of(const Rational& q);
};

struct FamilyDescriptor {
  enum class Kind : std::uint8_t {
    kDiscrete,      // {{x} : x in A2}
    kInterval,      // {(p, q)}, empty when p >= q
    kRightRays,     // {[y, q) : y in F(n), y < q}
    kLeftRays,      // {(q, y] : y in H(n), q < y}
    kIntervalGrid,  // {(m/2^t, (m+2)/2^t) : m integer}
    kRightGrid,     // right rays of F(t) ending on the grid 2^-t Z
    kLeftGrid,      // left rays of H(t) starting on the grid 2^-t Z
  };

  Kind kind = Kind::kDiscrete;
  Rational p;
  Rational q;
  std::uint64_t n = 0;

  static FamilyDescriptor discrete() { return {}; }
  static FamilyDescriptor interval(const Rational& p, const Rational& q) { return {Kind::kInterval, p, q, 0}; }
  static FamilyDescriptor right_rays(const Rational& q, std::uint64_t n) { return {Kind::kRightRays, 0, q, n}; }
  static FamilyDescriptor left_rays(const Rational& q, std::uint64_t n) { return {Kind::kLeftRays, 0, q, n}; }
  static FamilyDescriptor interval_grid(std::uint64_t t) { return {Kind::kIntervalGrid, 0, 0, t}; }
  static FamilyDescriptor right_grid(std::uint64_t t) { return {Kind::kRightGrid, 0, 0, t}; }
  static FamilyDescriptor left_grid(std::uint64_t t) { return {Kind::kLeftGrid, 0, 0, t}; }

  std::string to_string() const;
  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

// e(0) = D; for i >= 1 with i - 1 = 3t + r: r = 0 interval grid t, r = 1
// right grid t, r = 2 left grid t.
FamilyDescriptor family_at(std::uint64_t i);
// Inverse of family_at for discrete and grid descriptors.
std::optional<std::uint64_t> family_index(const FamilyDescriptor& f);

Span min_nbhd_span(const Cover& c, const Decomposition& d, const FamilyDescriptor& f, const Rational& x);
RSet min_nbhd_family(const Cover& c, const Decomposition& d, const FamilyDescriptor& f, const Rational& x);
// M_n(x).
Span min_nbhd_level_span(const Cover& c, const Decomposition& d, std::uint64_t n, const Rational& x);
RSet min_nbhd_level(const Cover& c, const Decomposition& d, std::uint64_t n, const Rational& x);

struct InteriorReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks that the minimal neighborhood at each probe is open at the probe and
// at its closed end, and that the closed end carries a compatible label.
InteriorReport verify_interior_preserving(const Cover& c, const Decomposition& d, const FamilyDescriptor& f,
                                          const std::vector<Rational>& probes);

// Grid helpers shared with the quasi-metric.
Rational grid_above(const Rational& x, std::uint64_t t);
Rational grid_below(const Rational& x, std::uint64_t t);
Span grid_cell(const Rational& x, std::uint64_t t);

}  // namespace hybridline
