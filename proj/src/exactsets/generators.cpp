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
#include <numeric>
#include <set>

#include "hybridline/errors.hpp"
#include "internal.hpp"

namespace hybridline {

void SeqGen::validate() const {
  if (coeff == 0) throw PreconditionError("generator coefficient must be nonzero");
  if (!(ratio > 0 && ratio < 1)) throw PreconditionError("generator ratio must lie in (0, 1)");
}

Rational SeqGen::term(std::uint64_t k) const { return limit + coeff * ipow(ratio, k); }

std::optional<std::uint64_t> seq_member(const SeqGen& g, const Rational& x) {
  Rational v = (x - g.limit) / g.coeff;
  if (v <= 0) return std::nullopt;
  // ratio = p/q in lowest terms, so ratio^k = p^k / q^k is also in lowest
  // terms and k is read off the denominator.
  const Integer& p = g.ratio.get_num();
  const Integer& q = g.ratio.get_den();
  Integer den = v.get_den();
  std::uint64_t k = 0;
  while (den > 1) {
    if (mpz_divisible_p(den.get_mpz_t(), q.get_mpz_t()) == 0) return std::nullopt;
    den /= q;
    ++k;
  }
  if (den != 1) return std::nullopt;
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  if (v.get_num() != pk) return std::nullopt;
  if (k < g.start) return std::nullopt;
  return k;
}

bool CountableSet::contains(const Rational& x) const {
  if (std::find(points.begin(), points.end(), x) != points.end()) return true;
  for (const auto& g : gens) {
    if (seq_member(g, x)) return true;
  }
  return false;
}

namespace detail {

namespace {

using Vec = std::vector<long long>;


// Pairwise coprime integers > 1 such that every input is a product of powers
// of them (gcd refinement; no factorization needed).
std::vector<Integer> coprime_base(std::vector<Integer> xs) {
  std::erase_if(xs, [](const Integer& x) { return x <= 1; });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < xs.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < xs.size() && !changed; ++j) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), xs[i].get_mpz_t(), xs[j].get_mpz_t());
        if (g == 1) continue;
        Integer a = xs[i] / g;
        Integer b = xs[j] / g;
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(j));
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
        for (Integer* v : {&a, &b, &g}) {
          if (*v > 1) xs.push_back(*v);
        }
        changed = true;
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

Vec exponents(Integer n, const std::vector<Integer>& base) {
  Vec e(base.size(), 0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    while (mpz_divisible_p(n.get_mpz_t(), base[i].get_mpz_t()) != 0) {
      n /= base[i];
      ++e[i];
    }
  }
  if (n != 1) throw NotCanonicalizable("coprime base does not cover an input");
  return e;
}

Vec exponents(const Rational& q, const std::vector<Integer>& base) {
  Vec num = exponents(Integer(abs(q.get_num())), base);
  Vec den = exponents(Integer(q.get_den()), base);
  for (std::size_t i = 0; i < num.size(); ++i) num[i] -= den[i];
  return num;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1 = 0;
  long long y1 = 0;
  const long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

void check_head(std::uint64_t count) {
  if (count > kMaxHeadTerms) {
    throw NotCanonicalizable("generator head exceeds " + std::to_string(kMaxHeadTerms) + " terms");
  }
}

// Index progression {first + t * period : t >= 0} of g's terms shared with h.
struct Progression {
  std::uint64_t first;
  std::uint64_t period;  // 0 means a single index
};

std::optional<Progression> common_indices_same_limit(const SeqGen& g, const SeqGen& h) {
  const Rational w = g.coeff / h.coeff;
  if (w < 0) return std::nullopt;
  // coeff_g * r_g^k = coeff_h * r_h^j  <=>  w * r_g^k * r_h^-j = 1
  const auto base = coprime_base({w.get_num(), w.get_den(), g.ratio.get_num(), g.ratio.get_den(),
                                  h.ratio.get_num(), h.ratio.get_den()});
  const Vec e = exponents(w, base);
  const Vec u = exponents(g.ratio, base);
  const Vec v = exponents(h.ratio, base);
  const std::size_t dim = base.size();
  const auto kmin = static_cast<long long>(g.start);
  const auto jmin = static_cast<long long>(h.start);

  // Look for two coordinates with a nonzero determinant.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t l = i + 1; l < dim; ++l) {
      const __int128 det = static_cast<__int128>(v[i]) * u[l] - static_cast<__int128>(u[i]) * v[l];
      if (det == 0) continue;
      const __int128 knum = static_cast<__int128>(e[i]) * v[l] - static_cast<__int128>(v[i]) * e[l];
      const __int128 jnum = static_cast<__int128>(u[l]) * e[i] - static_cast<__int128>(u[i]) * e[l];
      if (knum % det != 0 || jnum % det != 0) return std::nullopt;
      const auto k = static_cast<long long>(knum / det);
      const auto j = static_cast<long long>(jnum / det);
      for (std::size_t m = 0; m < dim; ++m) {
        if (e[m] + k * u[m] - j * v[m] != 0) return std::nullopt;
      }
      if (k < kmin || j < jmin) return std::nullopt;
      return Progression{static_cast<std::uint64_t>(k), 0};
    }
  }

  // u and v are parallel: u = alpha * w0, v = beta * w0 with w0 primitive.
  long long alpha = 0;
  for (long long x : u) alpha = std::gcd(alpha, x < 0 ? -x : x);
  Vec w0(dim);
  for (std::size_t i = 0; i < dim; ++i) w0[i] = u[i] / alpha;
  std::size_t pivot = 0;
  while (pivot < dim && w0[pivot] == 0) ++pivot;
  const long long beta = v[pivot] / w0[pivot];
  long long gamma = 0;
  if (!is_zero(e)) {
    if (e[pivot] % w0[pivot] != 0) return std::nullopt;
    gamma = e[pivot] / w0[pivot];
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i] != beta * w0[i] || e[i] != gamma * w0[i]) return std::nullopt;
  }
  // alpha * k - beta * j = -gamma
  long long x0 = 0;
  long long y0 = 0;
  const long long gcd = ext_gcd(alpha, beta, x0, y0);
  if ((-gamma) % gcd != 0) return std::nullopt;
  const long long scale = -gamma / gcd;
  const long long k_star = x0 * scale;
  const long long j_star = -y0 * scale;
  const long long k_step = beta / gcd;
  const long long j_step = alpha / gcd;
  const long long t = std::max(ceil_div(kmin - k_star, k_step), ceil_div(jmin - j_star, j_step));
  const long long first = k_star + t * k_step;
  return Progression{static_cast<std::uint64_t>(first), static_cast<std::uint64_t>(k_step)};
}

}  // namespace

void append(CountableSet& into, const CountableSet& from) {
  into.points.insert(into.points.end(), from.points.begin(), from.points.end());
  into.gens.insert(into.gens.end(), from.gens.begin(), from.gens.end());
}

std::uint64_t first_index_within(const SeqGen& g, const Rational& distance) {
  Rational gap = abs(g.coeff) * ipow(g.ratio, g.start);
  std::uint64_t k = g.start;
  while (gap >= distance) {
    gap *= g.ratio;
    ++k;
    check_head(k - g.start);
  }
  return k;
}

Split split_gen_by_points(const SeqGen& g, const std::vector<Rational>& points) {
  std::set<std::uint64_t> hits;
  for (const auto& p : points) {
    if (auto k = seq_member(g, p)) hits.insert(*k);
  }
  Split out;
  if (hits.empty()) {
    out.outside.gens.push_back(g);
    return out;
  }
  const std::uint64_t stop = *hits.rbegin() + 1;
  check_head(stop - g.start);
  Rational power = ipow(g.ratio, g.start);
  for (std::uint64_t k = g.start; k < stop; ++k) {
    Rational t = g.limit + g.coeff * power;
    (hits.contains(k) ? out.inside : out.outside).points.push_back(std::move(t));
    power *= g.ratio;
  }
  out.outside.gens.push_back(SeqGen{g.limit, g.coeff, g.ratio, stop});
  return out;
}

Split split_gen_by_gen(const SeqGen& g, const SeqGen& h) {
  if (g.limit != h.limit) {
    // Tails separate: beyond these indices each sequence stays within half the
    // distance of its own limit, so only the two heads can meet.
    const Rational half = abs(g.limit - h.limit) / 2;
    const std::uint64_t kg = first_index_within(g, half);
    const std::uint64_t kh = first_index_within(h, half);
    std::vector<Rational> common;
    for (std::uint64_t k = g.start; k < kg; ++k) {
      Rational t = g.term(k);
      if (seq_member(h, t)) common.push_back(std::move(t));
    }
    for (std::uint64_t j = h.start; j < kh; ++j) {
      Rational t = h.term(j);
      if (seq_member(g, t)) common.push_back(std::move(t));
    }
    return split_gen_by_points(g, common);
  }

  const auto prog = common_indices_same_limit(g, h);
  Split out;
  if (!prog) {
    out.outside.gens.push_back(g);
    return out;
  }
  if (prog->period == 0) return split_gen_by_points(g, {g.term(prog->first)});

  check_head(prog->first - g.start);
  check_head(prog->period);
  for (std::uint64_t k = g.start; k < prog->first; ++k) out.outside.points.push_back(g.term(k));
  const Rational step_ratio = ipow(g.ratio, prog->period);
  out.inside.gens.push_back(SeqGen{g.limit, g.coeff * ipow(g.ratio, prog->first), step_ratio, 0});
  for (std::uint64_t rho = 1; rho < prog->period; ++rho) {
    out.outside.gens.push_back(
        SeqGen{g.limit, g.coeff * ipow(g.ratio, prog->first + rho), step_ratio, 0});
  }
  return out;
}

Split split_by_spans(const CountableSet& k, const std::vector<Span>& spans) {
  Split out;
  for (const auto& p : k.points) {
    (spans_contain(spans, p) ? out.inside : out.outside).points.push_back(p);
  }
  for (const auto& g : k.gens) {
    // Past the nearest finite cut on the approach side, membership is constant.
    std::optional<Rational> boundary;
    for (const auto& s : spans) {
      for (const Cut* c : {&s.lo, &s.hi}) {
        if (!c->finite()) continue;
        if (g.increasing()) {
          if (c->value < g.limit && (!boundary || c->value > *boundary)) boundary = c->value;
        } else {
          if (c->value > g.limit && (!boundary || c->value < *boundary)) boundary = c->value;
        }
      }
    }
    const std::uint64_t tail = boundary ? first_index_within(g, abs(g.limit - *boundary)) : g.start;
    Rational power = ipow(g.ratio, g.start);
    for (std::uint64_t i = g.start; i < tail; ++i) {
      Rational t = g.limit + g.coeff * power;
      (spans_contain(spans, t) ? out.inside : out.outside).points.push_back(std::move(t));
      power *= g.ratio;
    }
    SeqGen rest{g.limit, g.coeff, g.ratio, tail};
    (spans_contain(spans, rest.term(tail)) ? out.inside : out.outside).gens.push_back(std::move(rest));
  }
  return out;
}

Split split_by_countable(const CountableSet& a, const CountableSet& b) {
  Split out;
  for (const auto& p : a.points) {
    (b.contains(p) ? out.inside : out.outside).points.push_back(p);
  }
  for (const auto& g : a.gens) {
    Split first = split_gen_by_points(g, b.points);
    append(out.inside, first.inside);
    CountableSet pending = std::move(first.outside);
    for (const auto& h : b.gens) {
      CountableSet next;
      for (auto& p : pending.points) {
        (seq_member(h, p) ? out.inside : next).points.push_back(std::move(p));
      }
      for (const auto& pg : pending.gens) {
        Split s = split_gen_by_gen(pg, h);
        append(out.inside, s.inside);
        append(next, s.outside);
      }
      pending = std::move(next);
    }
    append(out.outside, pending);
  }
  return out;
}

CountableSet disjointify(const CountableSet& raw) {
  CountableSet result;
  for (const auto& g : raw.gens) {
    CountableSet single;
    single.gens.push_back(g);
    append(result, split_by_countable(single, result).outside);
  }
  std::set<Rational> seen;
  for (const auto& p : raw.points) {
    if (seen.contains(p)) continue;
    seen.insert(p);
    bool in_gen = false;
    for (const auto& g : result.gens) {
      if (seq_member(g, p)) {
        in_gen = true;
        break;
      }
    }
    if (!in_gen && std::find(result.points.begin(), result.points.end(), p) == result.points.end()) {
      result.points.push_back(p);
    }
  }
  sort_canonical(result);
  return result;
}

void sort_canonical(CountableSet& k) {
  std::sort(k.points.begin(), k.points.end());
  k.points.erase(std::unique(k.points.begin(), k.points.end()), k.points.end());
  std::sort(k.gens.begin(), k.gens.end(), [](const SeqGen& a, const SeqGen& b) {
    if (a.limit != b.limit) return a.limit < b.limit;
    if (a.coeff != b.coeff) return a.coeff < b.coeff;
    if (a.ratio != b.ratio) return a.ratio < b.ratio;
    return a.start < b.start;
  });
}

}  // namespace detail
}  // namespace hybridline
