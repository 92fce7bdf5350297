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

#include "hybridline/separation.hpp"

#include <algorithm>

#include "hybridline/errors.hpp"

namespace hybridline {

namespace {

const Integer& n_cap() {
  static const Integer cap = Integer(1) << 64;
  return cap;
}

// Distance from c to the nearest point of `other` on one side, or nullopt
// when that side is empty.
std::optional<Rational> gap_right(const RSet& other, const Rational& c) {
  const SupResult r = rset_inf_above(other, c);
  if (!r.nonempty || r.kind != Endpoint::Kind::kFinite) return std::nullopt;
  return r.value - c;
}

std::optional<Rational> gap_left(const RSet& other, const Rational& c) {
  const SupResult r = rset_sup_below(other, c);
  if (!r.nonempty || r.kind != Endpoint::Kind::kFinite) return std::nullopt;
  return c - r.value;
}

}  // namespace

SepNbhd sep_nbhd(const Cover& c, const Rational& center, const RSet& other) {
  if (other.contains(center)) throw PreconditionError(format_rational(center) + " lies in the other set");
  const Label l = c.label_of(center);
  if (l == Label::kIsolated) return {center, Integer(1), RSet::point(center)};

  std::optional<Rational> gap;
  auto take = [&](std::optional<Rational> g) {
    if (g && (!gap || *g < *gap)) gap = g;
  };
  if (l != Label::kLeft) take(gap_right(other, center));
  if (l != Label::kRight) take(gap_left(other, center));

  Integer n = 1;
  if (gap) {
    if (*gap <= 0) throw NoFiniteN("no 1/n neighborhood of " + format_rational(center) + " misses the other set");
    n = std::max(Integer(1), ceil_of(1 / *gap));
    if (n > n_cap()) throw NoFiniteN("n(c) exceeds 2^64 at " + format_rational(center));
  }
  Rational half(Integer(1), 2 * n);
  half.canonicalize();
  return {center, n, c.local_base_nbhd(center, half).set};
}

NormalityReport check_normality(const Cover& c, const RSet& c0, const RSet& c1, const std::vector<Rational>& samples0,
                                const std::vector<Rational>& samples1) {
  NormalityReport report;
  const RSet both = c0 & c1;
  if (!both.empty()) {
    report.overlap = both.witness_point();
    return report;
  }
  auto build = [&](const std::vector<Rational>& samples, const RSet& other) {
    std::vector<std::optional<SepNbhd>> out;
    for (const auto& p : samples) {
      try {
        out.emplace_back(sep_nbhd(c, p, other));
      } catch (const Error& e) {
        report.errors.push_back(format_rational(p) + ": " + e.what());
        out.emplace_back();
      }
    }
    return out;
  };
  const auto u0 = build(samples0, c1);
  const auto u1 = build(samples1, c0);
  for (const auto& a : u0) {
    if (!a) continue;
    for (const auto& b : u1) {
      if (!b) continue;
      ++report.pairs_checked;
      if (!(a->set & b->set).empty()) report.intersecting.emplace_back(a->center, b->center);
    }
  }
  return report;
}

std::vector<Rational> sample_with_boundary(const RSet& s, SplitMix64& rng, std::size_t count) {
  std::vector<Rational> out = sample_members(s, rng, count);
  for (const auto& sp : s.spans()) {
    for (const Cut* cut : {&sp.lo, &sp.hi}) {
      if (cut->finite() && s.contains(cut->value)) out.push_back(cut->value);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<RSet, RSet> fuzz_closed_pair(const Cover& c, SplitMix64& rng) {
  std::vector<Rational> anchors;
  for (const auto& b : c.spec().breakpoints) anchors.push_back(b);
  for (const auto& [p, l] : c.spec().point_overrides) anchors.push_back(p);
  auto endpoint = [&](const Rational& v) { return rng.chance(1, 2) ? Endpoint::closed_at(v) : Endpoint::open(v); };
  for (int attempt = 0; attempt < 32; ++attempt) {
    // Alternate pieces between the sets; neighbors may share an endpoint.
    std::vector<Rational> cuts;
    const std::uint64_t count = 2 + rng.below(5);
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!anchors.empty() && rng.chance(1, 3)) {
        cuts.push_back(anchors[rng.below(anchors.size())]);
      } else {
        cuts.push_back(random_rational(rng, -4, 4, 8));
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.size() < 2) continue;
    RSet sets[2];
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      RSet piece;
      switch (rng.below(4)) {
        case 0:
          piece = RSet::point(cuts[i]);
          break;
        case 1:
          continue;
        default:
          piece = RSet::interval(endpoint(cuts[i]), endpoint(cuts[i + 1]));
          break;
      }
      sets[i % 2] = sets[i % 2] | piece;
    }
    const RSet c0 = c.closure(sets[0]);
    const RSet c1 = c.closure(sets[1]);
    if (c0.empty() || c1.empty() || !(c0 & c1).empty()) continue;
    return {c0, c1};
  }
  return {RSet::point(-8), RSet::point(8)};
}

Rational choose_epsilon(const Cover& c, const Rational& x, const RSet& excluded) {
  if (excluded.contains(x)) throw PreconditionError(format_rational(x) + " lies in the excluded set");
  for (std::uint64_t k = 0; k <= 64; ++k) {
    if ((c.local_base_nbhd(x, dyadic(k)).set & excluded).empty()) return dyadic(k);
  }
  throw NoFiniteN("no neighborhood of radius >= 2^-64 at " + format_rational(x) + " misses the excluded set");
}

namespace {

RSet spec_nbhd(const UrysohnSpec& s) {
  switch (s.label) {
    case Label::kTwoSided:
      return RSet::interval(Endpoint::open(s.x - s.epsilon), Endpoint::open(s.x + s.epsilon));
    case Label::kIsolated:
      return RSet::point(s.x);
    case Label::kRight:
      return RSet::interval(Endpoint::closed_at(s.x), Endpoint::open(s.x + s.epsilon));
    case Label::kLeft:
      return RSet::interval(Endpoint::open(s.x - s.epsilon), Endpoint::closed_at(s.x));
  }
  return {};
}

// 0 up to half the radius, 1 from the radius on, linear in between.
Rational ramp(const Rational& dist, const Rational& eps) {
  if (2 * dist <= eps) return 0;
  if (dist >= eps) return 1;
  return 2 * dist / eps - 1;
}

}  // namespace

void validate_urysohn(const UrysohnSpec& spec) {
  if (spec.epsilon <= 0) throw SpecInvalid("epsilon must be positive");
  if (!(spec_nbhd(spec) & spec.excluded).empty()) {
    throw SpecInvalid("the neighborhood of " + format_rational(spec.x) + " with radius " +
                      format_rational(spec.epsilon) + " meets the excluded set");
  }
}

UrysohnSpec make_urysohn(const Cover& c, const Rational& x, const RSet& excluded, std::optional<Rational> epsilon) {
  UrysohnSpec spec{x, c.label_of(x), epsilon ? *epsilon : choose_epsilon(c, x, excluded), excluded};
  validate_urysohn(spec);
  return spec;
}

namespace {

Rational evaluate(const UrysohnSpec& spec, const Rational& t) {
  const Rational& x = spec.x;
  switch (spec.label) {
    case Label::kIsolated:
      return t == x ? 0 : 1;
    case Label::kTwoSided:
      return ramp(abs(t - x), spec.epsilon);
    case Label::kRight:
      return t < x ? Rational(1) : ramp(t - x, spec.epsilon);
    case Label::kLeft:
      return t > x ? Rational(1) : ramp(x - t, spec.epsilon);
  }
  return 1;
}

}  // namespace

Rational urysohn_eval(const UrysohnSpec& spec, const Rational& t) {
  validate_urysohn(spec);
  return evaluate(spec, t);
}

std::vector<ContinuityFailure> check_continuity(const Cover& c, const UrysohnSpec& spec,
                                                const std::vector<Rational>& points, std::uint64_t max_tolerance,
                                                SplitMix64& rng, std::size_t samples_per_nbhd) {
  validate_urysohn(spec);
  std::vector<ContinuityFailure> failures;
  for (const auto& t : points) {
    const Rational ft = evaluate(spec, t);
    for (std::uint64_t k = 0; k <= max_tolerance; ++k) {
      const Rational tol = dyadic(k);
      bool found = false;
      for (std::uint64_t j = 0; j <= 64 && !found; ++j) {
        const RSet b = c.local_base_nbhd(t, dyadic(j)).set;
        const std::vector<Rational> s = sample_members(b, rng, samples_per_nbhd);
        found = std::all_of(s.begin(), s.end(), [&](const Rational& p) { return abs(evaluate(spec, p) - ft) < tol; });
      }
      if (!found) failures.push_back({t, k});
    }
  }
  return failures;
}

}  // namespace hybridline
