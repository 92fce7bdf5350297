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

#include "hybridline/qbase.hpp"

#include <mutex>

#include "hybridline/errors.hpp"

namespace hybridline {

namespace {

std::mutex cw_mu;
std::vector<Rational> cw_cache{Rational(0), Rational(1)};

}  // namespace

Rational RationalEnum::calkin_wilf(std::uint64_t m) {
  if (m == 0) throw PreconditionError("Calkin-Wilf positions start at 1");
  std::lock_guard lock(cw_mu);
  while (cw_cache.size() <= m) {
    const Rational& prev = cw_cache.back();
    Rational next = 1 / (2 * Rational(floor_of(prev)) - prev + 1);
    cw_cache.push_back(std::move(next));
  }
  return cw_cache[m];
}

Rational RationalEnum::at(std::uint64_t i) {
  if (i == 0) return 0;
  const std::uint64_t m = (i + 1) / 2;
  const Rational v = calkin_wilf(m);
  return i % 2 == 1 ? v : Rational(-v);
}

Integer RationalEnum::index_of(const Rational& q) {
  if (q == 0) return 0;
  // Climb the Calkin-Wilf tree: a/(a+b) is a left child, (a+b)/b a right one.
  Integer a = abs(q.get_num());
  Integer b = q.get_den();
  std::vector<bool> path;
  while (a != b) {
    if (a < b) {
      path.push_back(false);
      b -= a;
    } else {
      path.push_back(true);
      a -= b;
    }
  }
  Integer m = 1;
  for (auto it = path.rbegin(); it != path.rend(); ++it) m = 2 * m + (*it ? 1 : 0);
  return q > 0 ? Integer(2 * m - 1) : Integer(2 * m);
}

std::string FamilyDescriptor::to_string() const {
  switch (kind) {
    case Kind::kDiscrete:
      return "D";
    case Kind::kInterval:
      return "W(" + format_rational(p) + "," + format_rational(q) + ")";
    case Kind::kRightRays:
      return "U(" + format_rational(q) + "," + std::to_string(n) + ")";
    case Kind::kLeftRays:
      return "V(" + format_rational(q) + "," + std::to_string(n) + ")";
    case Kind::kIntervalGrid:
      return "Wgrid(" + std::to_string(n) + ")";
    case Kind::kRightGrid:
      return "Ugrid(" + std::to_string(n) + ")";
    case Kind::kLeftGrid:
      return "Vgrid(" + std::to_string(n) + ")";
  }
  return "?";
}

FamilyDescriptor family_at(std::uint64_t i) {
  if (i == 0) return FamilyDescriptor::discrete();
  const std::uint64_t t = (i - 1) / 3;
  switch ((i - 1) % 3) {
    case 0:
      return FamilyDescriptor::interval_grid(t);
    case 1:
      return FamilyDescriptor::right_grid(t);
    default:
      return FamilyDescriptor::left_grid(t);
  }
}

std::optional<std::uint64_t> family_index(const FamilyDescriptor& f) {
  switch (f.kind) {
    case FamilyDescriptor::Kind::kDiscrete:
      return 0;
    case FamilyDescriptor::Kind::kIntervalGrid:
      return 1 + 3 * f.n;
    case FamilyDescriptor::Kind::kRightGrid:
      return 2 + 3 * f.n;
    case FamilyDescriptor::Kind::kLeftGrid:
      return 3 + 3 * f.n;
    default:
      return std::nullopt;
  }
}

namespace {

// m / 2^t in lowest terms.
Rational over_pow2(Integer m, std::uint64_t t) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, t);
  Rational q(std::move(m), std::move(den));
  q.canonicalize();
  return q;
}

// floor(x * 2^t) and ceil(x * 2^t).
Integer scaled_floor(const Rational& x, std::uint64_t t) {
  Integer num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), t);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  return out;
}

Integer scaled_ceil(const Rational& x, std::uint64_t t) {
  Integer num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), t);
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  return out;
}

}  // namespace

Rational grid_above(const Rational& x, std::uint64_t t) { return over_pow2(scaled_floor(x, t) + 1, t); }

Rational grid_below(const Rational& x, std::uint64_t t) { return over_pow2(scaled_ceil(x, t) - 1, t); }

Span grid_cell(const Rational& x, std::uint64_t t) {
  return {Cut::after(grid_below(x, t)), Cut::before(grid_above(x, t))};
}

namespace {

Span right_ray(const RSet& f, const Rational& x, const Rational& end) {
  if (!(x < end)) return Span::real_line();
  const SupResult s = rset_sup_below(f, x);
  if (!s.nonempty || s.kind != Endpoint::Kind::kFinite) return Span::real_line();
  return {Cut::before(s.value), Cut::before(end)};
}

Span left_ray(const RSet& h, const Rational& x, const Rational& start) {
  if (!(start < x)) return Span::real_line();
  const SupResult s = rset_inf_above(h, x);
  if (!s.nonempty || s.kind != Endpoint::Kind::kFinite) return Span::real_line();
  return {Cut::after(start), Cut::after(s.value)};
}

}  // namespace

Span min_nbhd_span(const Cover& c, const Decomposition& d, const FamilyDescriptor& f, const Rational& x) {
  using Kind = FamilyDescriptor::Kind;
  switch (f.kind) {
    case Kind::kDiscrete:
      return c.label_of(x) == Label::kIsolated ? Span::singleton(x) : Span::real_line();
    case Kind::kInterval:
      if (f.p < x && x < f.q) return {Cut::after(f.p), Cut::before(f.q)};
      return Span::real_line();
    case Kind::kRightRays:
      return right_ray(d.F(f.n), x, f.q);
    case Kind::kLeftRays:
      return left_ray(d.H(f.n), x, f.q);
    case Kind::kIntervalGrid:
      return grid_cell(x, f.n);
    case Kind::kRightGrid:
      return right_ray(d.F(f.n), x, grid_above(x, f.n));
    case Kind::kLeftGrid:
      return left_ray(d.H(f.n), x, grid_below(x, f.n));
  }
  return Span::real_line();
}

RSet min_nbhd_family(const Cover& c, const Decomposition& d, const FamilyDescriptor& f, const Rational& x) {
  return RSet::from_spans({min_nbhd_span(c, d, f, x)});
}

Span min_nbhd_level_span(const Cover& c, const Decomposition& d, std::uint64_t n, const Rational& x) {
  Span m = Span::real_line();
  for (std::uint64_t i = 0; i <= n; ++i) m = m.intersect(min_nbhd_span(c, d, family_at(i), x));
  return m;
}

RSet min_nbhd_level(const Cover& c, const Decomposition& d, std::uint64_t n, const Rational& x) {
  return RSet::from_spans({min_nbhd_level_span(c, d, n, x)});
}

InteriorReport verify_interior_preserving(const Cover& c, const Decomposition& d, const FamilyDescriptor& f,
                                          const std::vector<Rational>& probes) {
  using Kind = FamilyDescriptor::Kind;
  InteriorReport report;
  for (const auto& x : probes) {
    const Span s = min_nbhd_span(c, d, f, x);
    const RSet v = RSet::from_spans({s});
    if (!c.open_level(v, x, 64)) {
      report.failures.push_back(f.to_string() + " at " + format_rational(x) + ": not open at the probe");
      continue;
    }
    std::optional<Rational> end;
    bool right = false;
    if ((f.kind == Kind::kRightRays || f.kind == Kind::kRightGrid) && s.lo.kind == Cut::Kind::kBefore) {
      end = s.lo.value;
      right = true;
    } else if ((f.kind == Kind::kLeftRays || f.kind == Kind::kLeftGrid) && s.hi.kind == Cut::Kind::kAfter) {
      end = s.hi.value;
    }
    if (!end) continue;
    const Label l = c.label_of(*end);
    const bool label_ok = l == Label::kIsolated || l == (right ? Label::kRight : Label::kLeft);
    if (!label_ok || !c.open_level(v, *end, 64)) {
      report.failures.push_back(f.to_string() + " at " + format_rational(x) + ": not open at endpoint " +
                                format_rational(*end));
    }
  }
  report.ok = report.failures.empty();
  return report;
}

}  // namespace hybridline
