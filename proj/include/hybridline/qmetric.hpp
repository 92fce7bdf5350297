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

// The non-archimedean quasi-metric: rho(x, y) = 2^-m for the first level m
// whose minimal neighborhood of x misses y, and 0 when x == y.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hybridline/qbase.hpp"

namespace hybridline {

struct DyadicDistance {
  // Absent for distance 0; k for 2^-k.
  std::optional<std::uint64_t> exponent;

  static DyadicDistance zero() { return {}; }
  static DyadicDistance pow2(std::uint64_t k) { return {k}; }

  bool is_zero() const { return !exponent; }
  Rational value() const { return exponent ? dyadic(*exponent) : Rational(0); }
  std::string to_string() const { return exponent ? format_dyadic(*exponent) : "0"; }

  friend std::strong_ordering operator<=>(const DyadicDistance& a, const DyadicDistance& b) {
    if (!a.exponent || !b.exponent) return !b.exponent <=> !a.exponent;
    return *b.exponent <=> *a.exponent;
  }
  friend bool operator==(const DyadicDistance&, const DyadicDistance&) = default;
};

struct DistanceResult {
  DyadicDistance distance;
  // The family at level m whose minimal neighborhood excludes y.
  std::optional<FamilyDescriptor> family;
};

class QuasiMetric {
 public:
  // Replaces M_n(x) after it is computed; used for negative controls.
  using Tamper = std::function<Span(std::uint64_t n, const Rational& x, const Span& honest)>;

  QuasiMetric(Cover c, Decomposition d, Tamper tamper = {});

  const Cover& cover() const { return cover_; }
  const Decomposition& decomposition() const { return decomp_; }

  Span level_span(std::uint64_t n, const Rational& x) const;
  // level_span(0..n_max, x) computed in one pass.
  std::vector<Span> level_spans(std::uint64_t n_max, const Rational& x) const;
  // B(x, 2^-n) = M_n(x).
  RSet ball(const Rational& x, std::uint64_t n) const;
  // A level n with y outside M_n(x); requires x != y.
  std::uint64_t witness_level(const Rational& x, const Rational& y) const;
  DistanceResult qdist(const Rational& x, const Rational& y) const;

 private:
  Cover cover_;
  Decomposition decomp_;
  Tamper tamper_;
};

QuasiMetric make_quasi_metric(const Cover& c);

struct AxiomViolation {
  std::string axiom;
  Rational x;
  Rational y;
  Rational z;
  std::string detail;
};

struct AxiomReport {
  std::size_t checked = 0;
  std::vector<AxiomViolation> violations;
};

// Samples `count` triples from `seed` and checks identity of indiscernibles
// and rho(x, y) <= max(rho(x, z), rho(z, y)).
AxiomReport check_axioms(const QuasiMetric& qm, std::uint64_t seed, std::size_t count);

// Membership of x in the set F_{k,n} built from balls and the rational
// enumeration prefix {q(0), ..., q(k)}. Throws LabelError unless x is in A3.
bool extractor_member(const QuasiMetric& qm, std::uint64_t k, std::uint64_t n, const Rational& x);

// Lexicographically least (k, n) with k, n <= bound and x in F_{k,n}.
// Throws BoundExhausted when there is none.
std::pair<std::uint64_t, std::uint64_t> extractor_cover(const QuasiMetric& qm, const Rational& x,
                                                        std::uint64_t bound);

// Candidate points p near x whose left approach p - 2^-i (i = lo..hi) stays
// inside F_{k,n}; each such p must lie in A2 ∪ A3. Returns the offending points.
std::vector<Rational> extractor_closure_leaks(const QuasiMetric& qm, std::uint64_t k, std::uint64_t n,
                                              const std::vector<Rational>& candidates);

}  // namespace hybridline
