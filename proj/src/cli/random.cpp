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

#include "hybridline/random.hpp"

#include <algorithm>

namespace hybridline {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

SplitMix64 SplitMix64::fork(std::uint64_t stream) {
  SplitMix64 mixer(state_ ^ (stream * 0xd1342543de82ef95ULL));
  return SplitMix64(mixer.next());
}

namespace {

Rational make(std::int64_t p, std::int64_t q) {
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

Rational point_in_span(const Span& s, SplitMix64& rng) {
  Rational lo;
  Rational hi;
  if (s.lo.finite() && s.hi.finite()) {
    lo = s.lo.value;
    hi = s.hi.value;
  } else if (s.lo.finite()) {
    lo = s.lo.value;
    hi = lo + 8;
  } else if (s.hi.finite()) {
    hi = s.hi.value;
    lo = hi - 8;
  } else {
    lo = -8;
    hi = 8;
  }
  // Interior points on a dyadic grid of the span, occasionally very close to
  // an end.
  const std::uint64_t depth = rng.chance(1, 4) ? 8 + rng.below(8) : 1 + rng.below(6);
  const auto cells = std::int64_t{1} << depth;
  const std::int64_t i = rng.between(1, cells - 1);
  Rational x = lo + (hi - lo) * make(i, cells);
  if (rng.chance(1, 3)) x = lo + (hi - lo) * make(static_cast<std::int64_t>(rng.between(1, 7)), 23);
  return x;
}

}  // namespace

Rational random_rational(SplitMix64& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  const std::int64_t q = rng.between(1, max_den);
  const std::int64_t p = rng.between(lo * q, hi * q);
  return make(p, q);
}

Rational nudge(const Rational& x, SplitMix64& rng, std::uint64_t max_shift) {
  const Rational step = dyadic(rng.below(max_shift + 1)) * make(rng.between(1, 3), 3);
  return rng.chance(1, 2) ? Rational(x + step) : Rational(x - step);
}

std::vector<Rational> sample_members(const RSet& s, SplitMix64& rng, std::size_t count) {
  std::vector<Rational> out;
  if (s.empty() || count == 0) return out;
  const auto& spans = s.spans();
  const auto& points = s.plus().points;
  const auto& gens = s.plus().gens;
  const std::uint64_t parts = spans.size() + points.size() + gens.size();
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 64 * count) {
    ++attempts;
    std::uint64_t pick = rng.below(parts);
    Rational x;
    if (pick < spans.size()) {
      x = point_in_span(spans[pick], rng);
    } else if ((pick -= spans.size()) < points.size()) {
      x = points[pick];
    } else {
      const SeqGen& g = gens[pick - points.size()];
      x = g.term(g.start + rng.below(12));
    }
    if (s.contains(x)) out.push_back(std::move(x));
  }
  return out;
}

std::vector<Rational> sample_points(const Cover& c, SplitMix64& rng, std::size_t count) {
  const FourCover& spec = c.spec();
  std::vector<Rational> special = spec.breakpoints;
  for (const auto& [p, l] : spec.point_overrides) special.push_back(p);
  for (const auto& [g, l] : spec.gen_overrides) {
    special.push_back(g.limit);
    special.push_back(g.term(g.start));
    special.push_back(g.term(g.start + 1));
  }
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t kind = rng.below(8);
    if (kind < 3 || special.empty()) {
      out.push_back(random_rational(rng, -8, 8, 12));
    } else if (kind < 5) {
      out.push_back(special[rng.below(special.size())]);
    } else if (kind < 7) {
      out.push_back(nudge(special[rng.below(special.size())], rng, 12));
    } else {
      const auto& gens = spec.gen_overrides;
      if (gens.empty()) {
        out.push_back(random_rational(rng, -4, 4, 64));
      } else {
        const SeqGen& g = gens[rng.below(gens.size())].first;
        out.push_back(g.term(g.start + rng.below(16)));
      }
    }
  }
  return out;
}

}  // namespace hybridline
