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

// Exact representable subsets of the real line.
//
// An RSet denotes (I ∪ P) ∖ M where I is a finite union of intervals, and P
// and M are countable sets built from finitely many points and geometric
// sequences ("generators"). Every operation is exact over GMP rationals; the
// class is closed under union, intersection, difference, complement, and the
// closure operators of the real line and both Sorgenfrey lines.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridline/rational.hpp"

namespace hybridline {

enum class Topology { kReal, kSorgenfreyRight, kSorgenfreyLeft };

struct Endpoint {
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  Kind kind = Kind::kFinite;
  Rational value;
  bool closed = false;

  static Endpoint neg_inf() { return {Kind::kNegInf, Rational(0), false}; }
  static Endpoint pos_inf() { return {Kind::kPosInf, Rational(0), false}; }
  static Endpoint open(const Rational& v) { return {Kind::kFinite, v, false}; }
  static Endpoint closed_at(const Rational& v) { return {Kind::kFinite, v, true}; }

  bool finite() const { return kind == Kind::kFinite; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Interval {
  Endpoint lo;
  Endpoint hi;

  // Throws PreconditionError unless lo.value < hi.value and infinite
  // endpoints are open.
  static Interval make(Endpoint lo, Endpoint hi);
  bool contains(const Rational& x) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A position on the extended line strictly between reals: before(x) sits just
// left of x and after(x) just right of it. A half-open cut span [lo, hi)
// encodes every interval shape, including singletons [before(x), after(x)).
struct Cut {
  enum class Kind : std::uint8_t { kNegInf, kBefore, kAfter, kPosInf };

  Kind kind = Kind::kNegInf;
  Rational value;

  static Cut neg_inf() { return {Kind::kNegInf, Rational(0)}; }
  static Cut pos_inf() { return {Kind::kPosInf, Rational(0)}; }
  static Cut before(const Rational& v) { return {Kind::kBefore, v}; }
  static Cut after(const Rational& v) { return {Kind::kAfter, v}; }

  bool finite() const { return kind == Kind::kBefore || kind == Kind::kAfter; }
  Cut reflected() const;

  friend std::strong_ordering operator<=>(const Cut& a, const Cut& b);
  friend bool operator==(const Cut& a, const Cut& b) { return (a <=> b) == 0; }
};

struct Span {
  Cut lo;
  Cut hi;

  static Span real_line() { return {Cut::neg_inf(), Cut::pos_inf()}; }
  static Span singleton(const Rational& x) { return {Cut::before(x), Cut::after(x)}; }
  static Span from_interval(const Interval& iv);

  bool empty() const { return !(lo < hi); }
  bool is_singleton() const;
  bool contains(const Rational& x) const {
    return lo <= Cut::before(x) && Cut::after(x) <= hi;
  }
  Span intersect(const Span& other) const;
  // Only valid for non-singleton, non-empty spans.
  Interval to_interval() const;
  friend bool operator==(const Span&, const Span&) = default;
};

// {limit + coeff * ratio^k : k >= start}; coeff != 0 and 0 < ratio < 1. The
// limit itself is never a member.
struct SeqGen {
  Rational limit;
  Rational coeff;
  Rational ratio;
  std::uint64_t start = 0;

  // Throws PreconditionError on coeff == 0 or ratio outside (0, 1).
  void validate() const;
  Rational term(std::uint64_t k) const;
  // Terms approach the limit from below.
  bool increasing() const { return coeff < 0; }
  SeqGen reflected() const { return {-limit, -coeff, ratio, start}; }
  friend bool operator==(const SeqGen&, const SeqGen&) = default;
};

std::optional<std::uint64_t> seq_member(const SeqGen& g, const Rational& x);

// Finitely many points plus finitely many generators, pairwise disjoint once
// produced by the library.
struct CountableSet {
  std::vector<Rational> points;
  std::vector<SeqGen> gens;

  bool empty() const { return points.empty() && gens.empty(); }
  bool contains(const Rational& x) const;
};

struct SupResult {
  Endpoint::Kind kind = Endpoint::Kind::kFinite;
  Rational value;
  bool attained = false;
  bool nonempty = false;
};

class RSet {
 public:
  RSet() = default;

  static RSet real_line();
  static RSet from_interval(const Interval& iv);
  static RSet interval(Endpoint lo, Endpoint hi);
  static RSet point(const Rational& x);
  static RSet points(std::vector<Rational> xs);
  static RSet generator(const SeqGen& g);
  static RSet from_spans(std::vector<Span> spans);
  // Denotes (spans ∪ plus) ∖ minus with no disjointness assumptions.
  static RSet build(std::vector<Span> spans, CountableSet plus, CountableSet minus);

  // "[0,1) U {2} U gen(0;1;1/2;1) minus gen(1;-1;1/2;1)". Throws ParseError.
  static RSet parse(std::string_view text);
  std::string to_string() const;

  bool contains(const Rational& x) const;
  bool empty() const { return spans_.empty() && plus_.empty(); }
  bool is_countable() const { return spans_.empty(); }
  bool subset_of(const RSet& other) const;

  const std::vector<Span>& spans() const { return spans_; }
  std::vector<Interval> intervals() const;
  const CountableSet& plus() const { return plus_; }
  const CountableSet& minus() const { return minus_; }

  RSet complement() const;
  RSet reflected() const;
  // Some member of the set, if any.
  std::optional<Rational> witness_point() const;

  friend RSet operator|(const RSet& a, const RSet& b);
  friend RSet operator&(const RSet& a, const RSet& b);
  friend RSet operator-(const RSet& a, const RSet& b);
  // Set equality, decided exactly through the differences.
  friend bool operator==(const RSet& a, const RSet& b);

 private:
  std::vector<Span> spans_;
  CountableSet plus_;
  CountableSet minus_;
};

enum class BoolOp { kUnion, kIntersect, kDiff };

bool rset_member(const RSet& s, const Rational& x);
RSet rset_boolean(BoolOp op, const RSet& s, const RSet& t);
RSet closure(const RSet& s, Topology top);
// sup(S ∩ (-inf, t]) and inf(S ∩ [t, +inf)).
SupResult rset_sup_below(const RSet& s, const Rational& t);
SupResult rset_inf_above(const RSet& s, const Rational& t);
bool is_countable(const RSet& s);

// Union of one basic neighborhood shape of radius r around every member:
// (p-r, p+r) for kTwoSided, [p, p+r) for kRight, (p-r, p] for kLeft.
enum class Reach { kTwoSided, kRight, kLeft };
RSet inflate(const RSet& s, Reach reach, const Rational& radius);

// Largest number of generator terms ever re-filed as explicit points.
inline constexpr std::uint64_t kMaxHeadTerms = 100000;

}  // namespace hybridline
