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

#include "hybridline/decompose.hpp"

#include <algorithm>

#include "hybridline/errors.hpp"

namespace hybridline {

Decomposition::Decomposition(Rule f, Rule h, IndexRule f_index, IndexRule h_index)
    : f_(std::move(f)),
      h_(std::move(h)),
      f_index_(std::move(f_index)),
      h_index_(std::move(h_index)),
      cache_(std::make_shared<Cache>()) {}

namespace {

const RSet& memo(std::mutex& mu, std::map<std::uint64_t, RSet>& table, const Decomposition::Rule& rule,
                 std::uint64_t n) {
  {
    std::lock_guard lock(mu);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
  }
  RSet value = rule(n);
  std::lock_guard lock(mu);
  return table.emplace(n, std::move(value)).first->second;
}

std::optional<std::uint64_t> scan(const Decomposition& d, bool f_side, const Rational& x, std::uint64_t max_scan) {
  for (std::uint64_t n = 0; n <= max_scan; ++n) {
    if ((f_side ? d.F(n) : d.H(n)).contains(x)) return n;
  }
  return std::nullopt;
}

}  // namespace

const RSet& Decomposition::F(std::uint64_t n) const { return memo(cache_->mu, cache_->f, f_, n); }

const RSet& Decomposition::H(std::uint64_t n) const { return memo(cache_->mu, cache_->h, h_, n); }

std::optional<std::uint64_t> Decomposition::f_index(const Rational& x, std::uint64_t max_scan) const {
  if (f_index_) return f_index_(x);
  return scan(*this, true, x, max_scan);
}

std::optional<std::uint64_t> Decomposition::h_index(const Rational& x, std::uint64_t max_scan) const {
  if (h_index_) return h_index_(x);
  return scan(*this, false, x, max_scan);
}

namespace {

// Smallest n with scale * 2^-(n+2) <= dist.
std::uint64_t level_for(const Rational& scale, const Rational& dist) {
  std::uint64_t n = 0;
  while (scale * dyadic(n + 2) > dist) ++n;
  return n;
}

std::uint64_t ceil_nonneg(const Rational& v) {
  if (v <= 0) return 0;
  const Integer c = ceil_of(v);
  if (!c.fits_ulong_p()) throw PreconditionError("index beyond 64 bits");
  return c.get_ui();
}

// The n-th closed core of one interval of the target set.
Span core_span(const Span& s, std::uint64_t n) {
  const Rational eta = dyadic(n + 2);
  const Rational big(static_cast<unsigned long>(n));
  Rational lo;
  Rational hi;
  const bool lo_fin = s.lo.finite();
  const bool hi_fin = s.hi.finite();
  if (lo_fin && hi_fin) {
    const Rational delta = (s.hi.value - s.lo.value) * eta;
    lo = s.lo.kind == Cut::Kind::kBefore ? s.lo.value : s.lo.value + delta;
    hi = s.hi.kind == Cut::Kind::kAfter ? s.hi.value : s.hi.value - delta;
  } else if (hi_fin) {
    lo = std::min<Rational>(-big, s.hi.value - 1);
    hi = s.hi.kind == Cut::Kind::kAfter ? s.hi.value : s.hi.value - eta;
  } else if (lo_fin) {
    lo = s.lo.kind == Cut::Kind::kBefore ? s.lo.value : s.lo.value + eta;
    hi = std::max<Rational>(big, s.lo.value + 1);
  } else {
    lo = -big;
    hi = big;
  }
  return {Cut::before(lo), Cut::after(hi)};
}

std::uint64_t core_level(const Span& s, const Rational& x) {
  std::uint64_t n = 0;
  const bool lo_fin = s.lo.finite();
  const bool hi_fin = s.hi.finite();
  if (lo_fin && hi_fin) {
    const Rational w = s.hi.value - s.lo.value;
    if (s.lo.kind == Cut::Kind::kAfter) n = std::max(n, level_for(w, x - s.lo.value));
    if (s.hi.kind == Cut::Kind::kBefore) n = std::max(n, level_for(w, s.hi.value - x));
  } else if (hi_fin) {
    if (x < s.hi.value - 1) n = std::max(n, ceil_nonneg(-x));
    if (s.hi.kind == Cut::Kind::kBefore) n = std::max(n, level_for(1, s.hi.value - x));
  } else if (lo_fin) {
    if (x > s.lo.value + 1) n = std::max(n, ceil_nonneg(x));
    if (s.lo.kind == Cut::Kind::kAfter) n = std::max(n, level_for(1, x - s.lo.value));
  } else {
    n = ceil_nonneg(abs(x));
  }
  return n;
}

// F(n) for one side: target plays A3, bad plays A1 ∪ A4.
struct Side {
  RSet target;
  RSet bad;
  std::vector<Rational> extras;

  Side(RSet t, RSet b) : target(std::move(t)), bad(std::move(b)) {
    // Target points that bad points approach from the right never survive
    // the left inflation, so they are listed on their own.
    std::vector<Rational> candidates;
    for (const auto& s : bad.spans()) {
      if (s.lo.finite()) candidates.push_back(s.lo.value);
    }
    for (const auto& g : bad.plus().gens) {
      if (!g.increasing()) candidates.push_back(g.limit);
    }
    for (auto& p : candidates) {
      if (target.contains(p)) extras.push_back(std::move(p));
    }
  }

  RSet at(std::uint64_t n) const {
    std::vector<Span> core;
    for (const auto& s : target.spans()) core.push_back(core_span(s, n));
    RSet out = RSet::from_spans(std::move(core));
    if (!bad.empty()) out = out - inflate(bad, Reach::kLeft, dyadic(n + 2));
    out = out & target;
    CountableSet finite;
    finite.points = target.plus().points;
    for (const auto& g : target.plus().gens) {
      for (std::uint64_t k = g.start; k <= g.start + n; ++k) finite.points.push_back(g.term(k));
    }
    finite.points.insert(finite.points.end(), extras.begin(), extras.end());
    return out | RSet::build({}, std::move(finite), {});
  }

  std::optional<std::uint64_t> index(const Rational& x) const {
    if (!target.contains(x)) return std::nullopt;
    if (std::find(extras.begin(), extras.end(), x) != extras.end()) return 0;
    if (std::find(target.plus().points.begin(), target.plus().points.end(), x) != target.plus().points.end()) {
      return 0;
    }
    for (const auto& g : target.plus().gens) {
      if (auto k = seq_member(g, x)) return *k - g.start;
    }
    for (const auto& s : target.spans()) {
      if (!s.contains(x)) continue;
      std::uint64_t n = core_level(s, x);
      const SupResult next_bad = rset_inf_above(bad, x);
      if (next_bad.nonempty && next_bad.kind == Endpoint::Kind::kFinite) {
        const Rational gap = next_bad.value - x;
        if (gap <= 0) return std::nullopt;
        n = std::max(n, level_for(1, gap));
      }
      return n;
    }
    return std::nullopt;
  }
};

}  // namespace

Decomposition synthesize_decomposition(const Cover& c) {
  const RSet& a1 = c.region(Label::kTwoSided);
  auto right = std::make_shared<Side>(c.region(Label::kRight), a1 | c.region(Label::kLeft));
  // H is F of the mirrored cover, mirrored back.
  auto left = std::make_shared<Side>(c.region(Label::kLeft).reflected(), (a1 | c.region(Label::kRight)).reflected());
  return Decomposition([right](std::uint64_t n) { return right->at(n); },
                       [left](std::uint64_t n) { return left->at(n).reflected(); },
                       [right](const Rational& x) { return right->index(x); },
                       [left](const Rational& x) { return left->index(-x); });
}

std::string DecompositionReport::describe() const {
  if (ok) return "ok";
  std::string out = "n=" + std::to_string(n) + " " + check;
  if (witness) out += " witness=" + format_rational(*witness);
  return out;
}

DecompositionReport validate_decomposition(const Cover& c, const Decomposition& d, std::uint64_t n_max) {
  const RSet& a2 = c.region(Label::kIsolated);
  const RSet a23 = a2 | c.region(Label::kRight);
  const RSet a24 = a2 | c.region(Label::kLeft);
  struct Check {
    const char* name;
    bool f_side;
    bool closed;
  };
  const Check checks[] = {
      {"F(n) in A3", true, false},
      {"cl_left F(n) in A2+A3", true, true},
      {"H(n) in A4", false, false},
      {"cl_right H(n) in A2+A4", false, true},
  };
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    for (const auto& ch : checks) {
      const RSet& fam = ch.f_side ? d.F(n) : d.H(n);
      RSet lhs = fam;
      const RSet* rhs = ch.f_side ? &c.region(Label::kRight) : &c.region(Label::kLeft);
      if (ch.closed) {
        lhs = closure(fam, ch.f_side ? Topology::kSorgenfreyLeft : Topology::kSorgenfreyRight);
        rhs = ch.f_side ? &a23 : &a24;
      }
      const RSet excess = lhs - *rhs;
      if (!excess.empty()) return {false, n, ch.name, excess.witness_point()};
    }
  }
  return {};
}

namespace {

Integer height(const Rational& q) { return Integer(abs(q.get_num())) + q.get_den(); }

bool height_less(const Rational& a, const Rational& b) {
  const Integer ha = height(a);
  const Integer hb = height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

std::vector<Rational> GdeltaCertificate::defect_up_to(const Integer& bound) const {
  std::vector<Rational> out;
  for (const auto& p : defect_.plus().points) {
    if (height(p) <= bound) out.push_back(p);
  }
  for (const auto& g : defect_.plus().gens) {
    // height(term k) >= den(ratio)^k / (|num(coeff)| * den(limit)).
    const Integer slack = Integer(abs(g.coeff.get_num())) * g.limit.get_den() * bound;
    const Integer q = g.ratio.get_den();
    Integer qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), g.start);
    for (std::uint64_t k = g.start; qk <= slack; ++k, qk *= q) {
      Rational t = g.term(k);
      if (height(t) <= bound) out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), height_less);
  return out;
}

std::vector<Rational> GdeltaCertificate::defect_points(std::size_t count) const {
  if (count == 0) return {};
  Integer max_point_height = 0;
  for (const auto& p : defect_.plus().points) max_point_height = std::max(max_point_height, height(p));
  for (Integer bound = 4;; bound *= 2) {
    std::vector<Rational> v = defect_up_to(bound);
    const bool complete = defect_.plus().gens.empty() && bound >= max_point_height;
    if (v.size() >= count || complete) {
      if (v.size() > count) v.resize(count);
      return v;
    }
  }
}

std::optional<std::size_t> GdeltaCertificate::defect_index(const Rational& y) const {
  if (!defect_.contains(y)) return std::nullopt;
  const std::vector<Rational> v = defect_up_to(height(y));
  auto it = std::find(v.begin(), v.end(), y);
  return static_cast<std::size_t>(it - v.begin());
}

RSet GdeltaCertificate::open_family(std::uint64_t n) const {
  RSet out = closure_.empty() ? closure_ : inflate(closure_, Reach::kTwoSided, dyadic(n));
  return out - RSet::points(defect_points(static_cast<std::size_t>(n)));
}

GdeltaCertificate gdelta_extract(const RSet& f, Topology side) {
  if (side == Topology::kReal) throw PreconditionError("gdelta_extract needs a Sorgenfrey side");
  if (!(closure(f, side) == f)) {
    throw NotOneSideClosed(std::string("set is not closed in the ") +
                           (side == Topology::kSorgenfreyRight ? "right" : "left") + " Sorgenfrey topology");
  }
  GdeltaCertificate cert;
  cert.f_ = f;
  cert.closure_ = closure(f, Topology::kReal);
  cert.defect_ = cert.closure_ - f;
  return cert;
}

Verdict classify(const Cover& c) {
  Verdict v;
  v.quasi_metrizable = true;
  v.witness = std::make_shared<Decomposition>(synthesize_decomposition(c));
  const RSet& a2 = c.region(Label::kIsolated);
  const RSet a34 = c.region(Label::kRight) | c.region(Label::kLeft);
  v.metrizable_sufficient = is_countable(a34);
  if (is_countable(a2)) v.second_countable = is_countable(a2 | a34);
  return v;
}

}  // namespace hybridline
