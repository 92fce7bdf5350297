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

#include <algorithm>

#include "hybridline/errors.hpp"
#include "internal.hpp"

namespace hybridline {

using detail::append;
using detail::Split;

namespace {

std::vector<Span> add_point(const std::vector<Span>& spans, const Rational& x) {
  std::vector<Span> out = spans;
  out.push_back(Span::singleton(x));
  return detail::normalize_spans(std::move(out));
}

std::vector<Span> remove_point(const std::vector<Span>& spans, const Rational& x) {
  return detail::intersect_spans(spans, detail::complement_spans({Span::singleton(x)}));
}

// Removes x from a countable set whose generators might contain it.
void erase_member(CountableSet& k, const Rational& x) {
  std::erase(k.points, x);
  std::vector<SeqGen> gens;
  for (const auto& g : k.gens) {
    if (!seq_member(g, x)) {
      gens.push_back(g);
      continue;
    }
    Split s = detail::split_gen_by_points(g, {x});
    append(k, CountableSet{s.outside.points, {}});
    gens.insert(gens.end(), s.outside.gens.begin(), s.outside.gens.end());
  }
  k.gens = std::move(gens);
}

// Finite endpoints of the spans that are members (closed) and non-members (open).
void endpoint_values(const std::vector<Span>& spans, std::vector<Rational>& closed,
                     std::vector<Rational>& open) {
  for (const auto& s : spans) {
    if (s.lo.kind == Cut::Kind::kBefore) closed.push_back(s.lo.value);
    if (s.lo.kind == Cut::Kind::kAfter) open.push_back(s.lo.value);
    if (s.hi.kind == Cut::Kind::kAfter) closed.push_back(s.hi.value);
    if (s.hi.kind == Cut::Kind::kBefore) open.push_back(s.hi.value);
  }
}

Split split_by_rset(const CountableSet& k, const RSet& t) {
  Split by_spans = detail::split_by_spans(k, t.spans());
  Split in_minus = detail::split_by_countable(by_spans.inside, t.minus());
  Split in_plus = detail::split_by_countable(by_spans.outside, t.plus());
  Split out;
  append(out.inside, in_minus.outside);
  append(out.inside, in_plus.inside);
  append(out.outside, in_minus.inside);
  append(out.outside, in_plus.outside);
  return out;
}

}  // namespace

RSet RSet::build(std::vector<Span> spans, CountableSet plus, CountableSet minus) {
  spans = detail::normalize_spans(std::move(spans));
  std::vector<Span> proper;
  for (auto& s : spans) {
    if (s.is_singleton()) {
      plus.points.push_back(s.lo.value);
    } else {
      proper.push_back(std::move(s));
    }
  }
  spans = std::move(proper);

  // (spans ∪ plus) ∖ minus
  CountableSet p = detail::split_by_spans(detail::disjointify(plus), spans).outside;
  const CountableSet m_all = detail::disjointify(minus);
  p = detail::split_by_countable(p, m_all).outside;
  CountableSet m = detail::split_by_spans(m_all, spans).inside;

  // Isolated carve-outs become cuts in the interval part.
  for (const auto& x : m.points) spans = remove_point(spans, x);
  m.points.clear();

  // A carved closed endpoint opens; a plus point on an open endpoint closes it.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Rational> closed;
    std::vector<Rational> open;
    endpoint_values(spans, closed, open);
    for (const auto& e : closed) {
      if (m.contains(e)) {
        spans = remove_point(spans, e);
        erase_member(m, e);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (const auto& e : open) {
      if (p.contains(e)) {
        spans = add_point(spans, e);
        erase_member(p, e);
        changed = true;
        break;
      }
    }
  }

  detail::sort_canonical(p);
  detail::sort_canonical(m);
  RSet out;
  out.spans_ = std::move(spans);
  out.plus_ = std::move(p);
  out.minus_ = std::move(m);
  return out;
}

RSet RSet::real_line() { return from_spans({Span::real_line()}); }

RSet RSet::from_interval(const Interval& iv) { return from_spans({Span::from_interval(iv)}); }

RSet RSet::interval(Endpoint lo, Endpoint hi) { return from_interval(Interval::make(std::move(lo), std::move(hi))); }

RSet RSet::point(const Rational& x) { return points({x}); }

RSet RSet::points(std::vector<Rational> xs) { return build({}, CountableSet{std::move(xs), {}}, {}); }

RSet RSet::generator(const SeqGen& g) {
  g.validate();
  return build({}, CountableSet{{}, {g}}, {});
}

RSet RSet::from_spans(std::vector<Span> spans) { return build(std::move(spans), {}, {}); }

bool RSet::contains(const Rational& x) const {
  if (minus_.contains(x)) return false;
  if (plus_.contains(x)) return true;
  return detail::spans_contain(spans_, x);
}

std::vector<Interval> RSet::intervals() const {
  std::vector<Interval> out;
  out.reserve(spans_.size());
  for (const auto& s : spans_) out.push_back(s.to_interval());
  return out;
}

RSet RSet::complement() const { return build(detail::complement_spans(spans_), minus_, plus_); }

RSet RSet::reflected() const {
  std::vector<Span> spans;
  for (const auto& s : spans_) spans.push_back({s.hi.reflected(), s.lo.reflected()});
  auto mirror = [](const CountableSet& k) {
    CountableSet out;
    for (const auto& p : k.points) out.points.push_back(-p);
    for (const auto& g : k.gens) out.gens.push_back(g.reflected());
    return out;
  };
  return build(std::move(spans), mirror(plus_), mirror(minus_));
}

RSet operator&(const RSet& a, const RSet& b) {
  CountableSet plus = split_by_rset(a.plus_, b).inside;
  append(plus, split_by_rset(b.plus_, a).inside);
  CountableSet minus = a.minus_;
  append(minus, b.minus_);
  return RSet::build(detail::intersect_spans(a.spans_, b.spans_), std::move(plus), std::move(minus));
}

RSet operator|(const RSet& a, const RSet& b) { return (a.complement() & b.complement()).complement(); }

RSet operator-(const RSet& a, const RSet& b) { return a & b.complement(); }

bool RSet::subset_of(const RSet& other) const { return (*this - other).empty(); }

bool operator==(const RSet& a, const RSet& b) { return a.subset_of(b) && b.subset_of(a); }

std::optional<Rational> RSet::witness_point() const {
  for (const auto& s : spans_) {
    Rational lo;
    Rational hi;
    if (s.lo.finite() && s.hi.finite()) {
      lo = s.lo.value;
      hi = s.hi.value;
    } else if (s.lo.finite()) {
      lo = s.lo.value;
      hi = s.lo.value + 2;
    } else if (s.hi.finite()) {
      lo = s.hi.value - 2;
      hi = s.hi.value;
    } else {
      lo = -1;
      hi = 1;
    }
    // Interior points avoid the endpoints; carve-outs are countable, so some
    // dyadic subdivision point survives.
    for (std::uint64_t level = 1; level < 64; ++level) {
      const Rational step = (hi - lo) * dyadic(level);
      for (std::uint64_t i = 1; i < (std::uint64_t{1} << std::min<std::uint64_t>(level, 10)); i += 2) {
        Rational x = lo + step * i;
        if (contains(x)) return x;
      }
    }
  }
  if (!plus_.points.empty()) return plus_.points.front();
  if (!plus_.gens.empty()) return plus_.gens.front().term(plus_.gens.front().start);
  return std::nullopt;
}

bool rset_member(const RSet& s, const Rational& x) { return s.contains(x); }

RSet rset_boolean(BoolOp op, const RSet& s, const RSet& t) {
  switch (op) {
    case BoolOp::kUnion:
      return s | t;
    case BoolOp::kIntersect:
      return s & t;
    case BoolOp::kDiff:
      return s - t;
  }
  return s;
}

bool is_countable(const RSet& s) { return s.is_countable(); }

RSet closure(const RSet& s, Topology top) {
  const bool close_lo = top != Topology::kSorgenfreyLeft;
  const bool close_hi = top != Topology::kSorgenfreyRight;
  std::vector<Span> spans;
  for (auto sp : s.spans()) {
    if (close_lo && sp.lo.finite()) sp.lo = Cut::before(sp.lo.value);
    if (close_hi && sp.hi.finite()) sp.hi = Cut::after(sp.hi.value);
    spans.push_back(std::move(sp));
  }
  CountableSet plus = s.plus();
  for (const auto& g : s.plus().gens) {
    const bool from_above = !g.increasing();
    if (top == Topology::kReal || (top == Topology::kSorgenfreyRight && from_above) ||
        (top == Topology::kSorgenfreyLeft && !from_above)) {
      plus.points.push_back(g.limit);
    }
  }
  return RSet::build(std::move(spans), std::move(plus), {});
}

namespace {

struct Best {
  SupResult r;

  // Folds a candidate supremum (or infimum, when `upper` is false).
  void offer(Endpoint::Kind kind, const Rational& value, bool attained, bool upper) {
    auto key = [](Endpoint::Kind k) {
      return k == Endpoint::Kind::kNegInf ? 0 : (k == Endpoint::Kind::kFinite ? 1 : 2);
    };
    if (!r.nonempty) {
      r = {kind, value, attained, true};
      return;
    }
    int c = key(kind) - key(r.kind);
    if (c == 0 && kind == Endpoint::Kind::kFinite) c = cmp(value, r.value);
    if (!upper) c = -c;
    if (c > 0) {
      r = {kind, value, attained, true};
    } else if (c == 0) {
      r.attained = r.attained || attained;
    }
  }
};

}  // namespace

SupResult rset_sup_below(const RSet& s, const Rational& t) {
  Best best;
  for (const auto& sp : s.spans()) {
    if (!(sp.lo <= Cut::before(t))) continue;
    if (Cut::after(t) <= sp.hi) {
      // t lies in the span; carve-outs do not move the supremum.
      best.offer(Endpoint::Kind::kFinite, t, s.contains(t), true);
    } else if (sp.hi.kind == Cut::Kind::kPosInf) {
      best.offer(Endpoint::Kind::kPosInf, 0, false, true);
    } else if (sp.lo < sp.hi) {
      best.offer(Endpoint::Kind::kFinite, sp.hi.value, sp.hi.kind == Cut::Kind::kAfter, true);
    }
  }
  const auto& plus = s.plus();
  for (const auto& p : plus.points) {
    if (p <= t) best.offer(Endpoint::Kind::kFinite, p, true, true);
  }
  for (const auto& g : plus.gens) {
    if (g.increasing()) {
      if (g.limit <= t) {
        best.offer(Endpoint::Kind::kFinite, g.limit, false, true);
      } else {
        // Largest term <= t, if any: terms increase with k.
        const Rational first = g.term(g.start);
        if (first > t) continue;
        const std::uint64_t k = detail::first_index_within(g, g.limit - t);
        best.offer(Endpoint::Kind::kFinite, g.term(k - 1), true, true);
      }
    } else {
      if (t <= g.limit) continue;
      const std::uint64_t k = detail::first_index_within(g, t - g.limit + Rational(0));
      // Terms with index >= k are < t; the term equal to t (if any) is allowed.
      std::uint64_t idx = k;
      if (k > g.start && g.term(k - 1) == t) idx = k - 1;
      best.offer(Endpoint::Kind::kFinite, g.term(idx), true, true);
    }
  }
  return best.r;
}

SupResult rset_inf_above(const RSet& s, const Rational& t) {
  Best best;
  for (const auto& sp : s.spans()) {
    if (!(Cut::after(t) <= sp.hi)) continue;
    if (sp.lo <= Cut::before(t)) {
      best.offer(Endpoint::Kind::kFinite, t, s.contains(t), false);
    } else if (sp.lo < sp.hi) {
      best.offer(Endpoint::Kind::kFinite, sp.lo.value, sp.lo.kind == Cut::Kind::kBefore, false);
    }
  }
  const auto& plus = s.plus();
  for (const auto& p : plus.points) {
    if (p >= t) best.offer(Endpoint::Kind::kFinite, p, true, false);
  }
  for (const auto& g : plus.gens) {
    if (!g.increasing()) {
      if (g.limit >= t) {
        best.offer(Endpoint::Kind::kFinite, g.limit, false, false);
      } else {
        // Smallest term >= t, if any: terms decrease with k.
        const Rational first = g.term(g.start);
        if (first < t) continue;
        const std::uint64_t k = detail::first_index_within(g, t - g.limit);
        best.offer(Endpoint::Kind::kFinite, g.term(k - 1), true, false);
      }
    } else {
      if (t >= g.limit) continue;
      const std::uint64_t k = detail::first_index_within(g, g.limit - t);
      std::uint64_t idx = k;
      if (k > g.start && g.term(k - 1) == t) idx = k - 1;
      best.offer(Endpoint::Kind::kFinite, g.term(idx), true, false);
    }
  }
  return best.r;
}

RSet inflate(const RSet& s, Reach reach, const Rational& radius) {
  if (radius <= 0) throw PreconditionError("inflate radius must be positive");
  const bool left = reach != Reach::kRight;
  const bool right = reach != Reach::kLeft;
  auto shape = [&](const Rational& p) {
    Span sp;
    sp.lo = left ? Cut::after(p - radius) : Cut::before(p);
    sp.hi = right ? Cut::before(p + radius) : Cut::after(p);
    return sp;
  };
  std::vector<Span> spans;
  for (auto sp : s.spans()) {
    if (left && sp.lo.finite()) sp.lo = Cut::after(sp.lo.value - radius);
    if (right && sp.hi.finite()) sp.hi = Cut::before(sp.hi.value + radius);
    spans.push_back(std::move(sp));
  }
  for (const auto& p : s.plus().points) spans.push_back(shape(p));
  for (const auto& g : s.plus().gens) {
    const std::uint64_t tail = detail::first_index_within(g, radius);
    for (std::uint64_t k = g.start; k < tail; ++k) spans.push_back(shape(g.term(k)));
    const Rational pk = g.term(tail);
    Span merged;
    if (g.increasing()) {
      merged.lo = shape(pk).lo;
      merged.hi = right ? Cut::before(g.limit + radius) : Cut::before(g.limit);
    } else {
      merged.lo = left ? Cut::after(g.limit - radius) : Cut::after(g.limit);
      merged.hi = shape(pk).hi;
    }
    spans.push_back(std::move(merged));
  }
  return RSet::from_spans(std::move(spans));
}

}  // namespace hybridline
