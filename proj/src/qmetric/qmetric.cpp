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

#include "hybridline/qmetric.hpp"

#include "hybridline/errors.hpp"
#include "hybridline/random.hpp"

namespace hybridline {

QuasiMetric::QuasiMetric(Cover c, Decomposition d, Tamper tamper)
    : cover_(std::move(c)), decomp_(std::move(d)), tamper_(std::move(tamper)) {}

QuasiMetric make_quasi_metric(const Cover& c) { return QuasiMetric(c, synthesize_decomposition(c)); }

Span QuasiMetric::level_span(std::uint64_t n, const Rational& x) const {
  const Span honest = min_nbhd_level_span(cover_, decomp_, n, x);
  return tamper_ ? tamper_(n, x, honest) : honest;
}

std::vector<Span> QuasiMetric::level_spans(std::uint64_t n_max, const Rational& x) const {
  std::vector<Span> out;
  out.reserve(n_max + 1);
  Span m = Span::real_line();
  for (std::uint64_t i = 0; i <= n_max; ++i) {
    m = m.intersect(min_nbhd_span(cover_, decomp_, family_at(i), x));
    out.push_back(tamper_ ? tamper_(i, x, m) : m);
  }
  return out;
}

RSet QuasiMetric::ball(const Rational& x, std::uint64_t n) const { return RSet::from_spans({level_span(n, x)}); }

std::uint64_t QuasiMetric::witness_level(const Rational& x, const Rational& y) const {
  if (x == y) throw PreconditionError("witness_level needs distinct points");
  switch (cover_.label_of(x)) {
    case Label::kIsolated:
      return 0;
    case Label::kTwoSided: {
      std::uint64_t t = 0;
      while (grid_cell(x, t).contains(y)) ++t;
      return 1 + 3 * t;
    }
    case Label::kRight: {
      const auto idx = decomp_.f_index(x);
      if (!idx) throw SearchExhausted("no F level covers " + format_rational(x));
      std::uint64_t t = *idx;
      while (y > x && grid_above(x, t) > y) ++t;
      return 2 + 3 * t;
    }
    case Label::kLeft: {
      const auto idx = decomp_.h_index(x);
      if (!idx) throw SearchExhausted("no H level covers " + format_rational(x));
      std::uint64_t t = *idx;
      while (y < x && grid_below(x, t) < y) ++t;
      return 3 + 3 * t;
    }
  }
  return 0;
}

DistanceResult QuasiMetric::qdist(const Rational& x, const Rational& y) const {
  if (x == y) return {DyadicDistance::zero(), std::nullopt};
  const std::uint64_t stop = tamper_ ? 256 : witness_level(x, y);
  Span m = Span::real_line();
  for (std::uint64_t i = 0; i <= stop; ++i) {
    m = m.intersect(min_nbhd_span(cover_, decomp_, family_at(i), x));
    const Span eff = tamper_ ? tamper_(i, x, m) : m;
    if (!eff.contains(y)) return {DyadicDistance::pow2(i), family_at(i)};
  }
  throw SearchExhausted("no level separates " + format_rational(y) + " from " + format_rational(x));
}

AxiomReport check_axioms(const QuasiMetric& qm, std::uint64_t seed, std::size_t count) {
  AxiomReport report;
  if (count == 0) return report;
  SplitMix64 rng(seed);
  const std::vector<Rational> xs = sample_points(qm.cover(), rng, count);
  const std::vector<Rational> extra = sample_points(qm.cover(), rng, 2 * count);
  struct Triple {
    Rational x, y, z;
  };
  std::vector<Triple> triples;
  triples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Rational& x = xs[i];
    Rational y;
    switch (rng.below(8)) {
      case 0:
        y = x;
        break;
      case 1:
      case 2:
        y = extra[2 * i];
        break;
      default:
        y = nudge(x, rng, 10);
        break;
    }
    Rational z;
    switch (rng.below(6)) {
      case 0:
        z = extra[2 * i + 1];
        break;
      case 1:
        z = x;
        break;
      case 2:
      case 3:
        z = nudge(x, rng, 10);
        break;
      default:
        z = nudge(y, rng, 10);
        break;
    }
    triples.push_back({x, std::move(y), std::move(z)});
  }

  for (const auto& [x, y, z] : triples) {
    ++report.checked;
    const DyadicDistance xy = qm.qdist(x, y).distance;
    const DyadicDistance xz = qm.qdist(x, z).distance;
    const DyadicDistance zy = qm.qdist(z, y).distance;
    if (xy.is_zero() != (x == y)) {
      report.violations.push_back({"identity", x, y, z, "rho(x,y)=" + xy.to_string()});
    }
    if (xy > std::max(xz, zy)) {
      report.violations.push_back({"ultrametric", x, y, z,
                                   "rho(x,y)=" + xy.to_string() + " rho(x,z)=" + xz.to_string() +
                                       " rho(z,y)=" + zy.to_string()});
    }
  }
  return report;
}

namespace {

// Smallest i with [x, x + 2^-i) inside the span, which must contain x.
std::uint64_t right_room(const Span& s, const Rational& x) {
  if (s.hi.kind == Cut::Kind::kPosInf) return 0;
  const Rational gap = s.hi.value - x;
  if (gap <= 0) throw PreconditionError("ball has no room to the right of its center");
  std::uint64_t i = 0;
  while (dyadic(i) > gap) ++i;
  return i;
}

struct ExtractorLevel {
  bool one_sided = false;
  Rational window_end;  // D_{n+1}(x) = [x, window_end)
};

ExtractorLevel extractor_level(const Span& ball, const Span& next, std::uint64_t n, const Rational& x) {
  ExtractorLevel out;
  out.one_sided = Cut::before(x) <= ball.lo;
  if (!out.one_sided) return out;
  const std::uint64_t m = right_room(next, x);
  const std::uint64_t j = std::max(n + 1, m);
  out.window_end = x + dyadic(j);
  return out;
}

bool hits_window(const ExtractorLevel& lv, std::uint64_t k, const Rational& x) {
  for (std::uint64_t i = 0; i <= k; ++i) {
    const Rational q = RationalEnum::at(i);
    if (x < q && q < lv.window_end) return true;
  }
  return false;
}

}  // namespace

bool extractor_member(const QuasiMetric& qm, std::uint64_t k, std::uint64_t n, const Rational& x) {
  if (qm.cover().label_of(x) != Label::kRight) {
    throw LabelError(format_rational(x) + " is not a right-sided point");
  }
  const ExtractorLevel lv = extractor_level(qm.level_span(n, x), qm.level_span(n + 1, x), n, x);
  return lv.one_sided && hits_window(lv, k, x);
}

std::pair<std::uint64_t, std::uint64_t> extractor_cover(const QuasiMetric& qm, const Rational& x,
                                                        std::uint64_t bound) {
  if (qm.cover().label_of(x) != Label::kRight) {
    throw LabelError(format_rational(x) + " is not a right-sided point");
  }
  const std::vector<Span> balls = qm.level_spans(bound + 1, x);
  std::vector<ExtractorLevel> levels;
  for (std::uint64_t n = 0; n <= bound; ++n) levels.push_back(extractor_level(balls[n], balls[n + 1], n, x));
  for (std::uint64_t k = 0; k <= bound; ++k) {
    const Rational q = RationalEnum::at(k);
    for (std::uint64_t n = 0; n <= bound; ++n) {
      // Earlier k were already rejected for every n, so only q(k) is new.
      const auto& lv = levels[n];
      if (lv.one_sided && x < q && q < lv.window_end) return {k, n};
    }
  }
  throw BoundExhausted("no F_{k,n} with k, n <= " + std::to_string(bound) + " contains " + format_rational(x));
}

std::vector<Rational> extractor_closure_leaks(const QuasiMetric& qm, std::uint64_t k, std::uint64_t n,
                                              const std::vector<Rational>& candidates) {
  std::vector<Rational> leaks;
  auto member = [&](const Rational& y) {
    return qm.cover().label_of(y) == Label::kRight && extractor_member(qm, k, n, y);
  };
  for (const auto& p : candidates) {
    bool approached = true;
    for (std::uint64_t i = 12; i <= 24 && approached; i += 4) approached = member(p - dyadic(i));
    if (!approached) continue;
    const Label l = qm.cover().label_of(p);
    if (l != Label::kIsolated && l != Label::kRight) leaks.push_back(p);
  }
  return leaks;
}

}  // namespace hybridline
