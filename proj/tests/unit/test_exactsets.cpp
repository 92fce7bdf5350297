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

#include <doctest.h>

#include <random>

#include "hybridline/errors.hpp"
#include "hybridline/exactsets.hpp"

using namespace hybridline;

namespace doctest {
template <>
struct StringMaker<RSet> {
  static String convert(const RSet& s) { return s.to_string().c_str(); }
};
}  // namespace doctest

namespace {

Rational Q(const char* s) { return parse_rational(s); }
RSet P(const char* s) { return RSet::parse(s); }
Rational R(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(format_rational(Q("6/4")) == "3/2");
  CHECK(format_rational(Q("-0/5")) == "0");
  CHECK(format_rational(Q("7")) == "7");
  CHECK_THROWS_AS(Q("1/0"), ParseError);
  CHECK_THROWS_AS(Q("x"), ParseError);
  CHECK_THROWS_AS(Q("1/-2"), ParseError);
  CHECK(dyadic(3) == Q("1/8"));
  CHECK(format_dyadic(5) == "2^-5");
}

TEST_CASE("membership") {
  CHECK_FALSE(P("[0,1) U {2}").contains(1));
  CHECK(P("[0,1) U {2}").contains(2));
  const RSet s = P("(0,1) minus gen(1;-1;1/2;1)");
  CHECK_FALSE(s.contains(Q("1/2")));
  CHECK_FALSE(s.contains(Q("3/4")));
  CHECK(s.contains(Q("1/3")));
}

TEST_CASE("seq_member") {
  CHECK(seq_member({0, 1, Q("1/2"), 1}, Q("1/8")) == 3u);
  CHECK_FALSE(seq_member({0, 1, Q("1/2"), 1}, Q("1/3")));
  CHECK(seq_member({1, -1, Q("1/3"), 0}, 0) == 0u);
  CHECK_FALSE(seq_member({0, 1, Q("1/2"), 1}, 1));
  CHECK_FALSE(seq_member({0, 1, Q("1/2"), 1}, 0));
  CHECK_FALSE(seq_member({0, 1, Q("1/2"), 1}, Q("-1/4")));
  const SeqGen odd{Q("2/3"), Q("-5/7"), Q("2/3"), 4};
  for (std::uint64_t k = 4; k <= 40; ++k) CHECK(seq_member(odd, odd.term(k)) == k);
  CHECK_FALSE(seq_member(odd, odd.term(3)));
}

TEST_CASE("boolean operations") {
  CHECK(P("[0,2]") - P("(1,2]") == P("[0,1]"));
  CHECK(((P("(0,1) U {3}")) & P("[1,3]")) == P("{3}"));
  CHECK((P("gen(0;1;1/2;1)") & P("gen(0;1;1/3;1)")).empty());
  CHECK(P("gen(0;1;1/2;1)") == (P("gen(0;1;1/4;1)") | P("gen(0;1/2;1/4;0)")));
  CHECK((P("gen(0;1;1/2;1)") & P("gen(0;1;1/4;1)")) == P("gen(0;1;1/4;1)"));
  CHECK((P("gen(0;1;1/4;1)") - P("gen(0;1;1/2;0)")).empty());
  // 2^-k = 4 * 8^-j has the solutions k = 3j - 2.
  const RSet both = P("gen(0;1;1/2;1)") & P("gen(0;4;1/8;1)");
  CHECK(both == P("gen(0;1/2;1/8;0)"));
  CHECK(P("(-inf,inf)").complement().empty());
  CHECK(P("{}").complement() == RSet::real_line());
}

TEST_CASE("intersection of generators matches bounded enumeration") {
  const SeqGen a{0, 1, Q("1/2"), 1};
  const SeqGen b{0, 1, Q("1/3"), 1};
  int common = 0;
  for (std::uint64_t k = 1; k <= 64; ++k) {
    for (std::uint64_t j = 1; j <= 64; ++j) common += a.term(k) == b.term(j);
  }
  CHECK(common == 0);
  CHECK((RSet::generator(a) & RSet::generator(b)).empty());
}

TEST_CASE("canonical text") {
  CHECK(P("[0,1) minus {0}").to_string() == "(0,1)");
  CHECK(P("(0,1) U {1}").to_string() == "(0,1]");
  CHECK(P("(0,1) U {2, 1/2}").to_string() == "(0,1) U {2}");
  CHECK(P("{}").to_string() == "{}");
  CHECK(P("(-inf,0] U (0,inf)").to_string() == "(-inf,inf)");
  for (const char* text : {"(0,1) minus gen(1;-1;1/2;1)", "[0,1) U {2} U gen(5;1;1/2;1)", "(-inf,-1) U [3,inf)"}) {
    const RSet s = P(text);
    CHECK(RSet::parse(s.to_string()) == s);
    CHECK(RSet::parse(s.to_string()).to_string() == s.to_string());
  }
  CHECK_THROWS_AS(P("[0,1"), ParseError);
  CHECK_THROWS_AS(P("[1,0]"), ParseError);
  CHECK_THROWS_AS(P("gen(0;1;2;1)"), ParseError);
  CHECK_THROWS_AS(P("[0,inf]"), ParseError);
}

TEST_CASE("closure") {
  CHECK(closure(P("(0,1)"), Topology::kSorgenfreyRight) == P("[0,1)"));
  CHECK(closure(P("(0,1)"), Topology::kSorgenfreyLeft) == P("(0,1]"));
  CHECK(closure(P("(0,1)"), Topology::kReal) == P("[0,1]"));
  CHECK(closure(P("gen(1;-1;1/2;1)"), Topology::kSorgenfreyLeft) == P("gen(1;-1;1/2;1) U {1}"));
  CHECK(closure(P("gen(1;-1;1/2;1)"), Topology::kSorgenfreyRight) == P("gen(1;-1;1/2;1)"));
  CHECK(closure(P("gen(0;1;1/2;1)"), Topology::kSorgenfreyRight) == P("gen(0;1;1/2;1) U {0}"));
  CHECK(closure(P("(0,1) minus {1/2}"), Topology::kReal) == P("[0,1]"));
}

TEST_CASE("sup_below and inf_above") {
  SupResult r = rset_sup_below(P("[0,1)"), 2);
  CHECK(r.nonempty);
  CHECK(r.value == 1);
  CHECK_FALSE(r.attained);
  r = rset_sup_below(P("gen(0;1;1/2;1)"), Q("1/3"));
  CHECK(r.value == Q("1/4"));
  CHECK(r.attained);
  CHECK_FALSE(rset_sup_below(P("{5}"), 0).nonempty);
  r = rset_sup_below(P("gen(0;1;1/2;1)"), Q("1/4"));
  CHECK(r.value == Q("1/4"));
  r = rset_sup_below(P("gen(1;-1;1/2;1)"), 2);
  CHECK(r.value == 1);
  CHECK_FALSE(r.attained);
  r = rset_sup_below(P("gen(1;-1;1/2;1)"), Q("4/5"));
  CHECK(r.value == Q("3/4"));
  r = rset_sup_below(P("[0,1]"), Q("1/2"));
  CHECK(r.value == Q("1/2"));
  CHECK(r.attained);
  r = rset_sup_below(P("(0,inf)"), 5);
  CHECK(r.value == 5);
  r = rset_inf_above(P("(0,1]"), -3);
  CHECK(r.value == 0);
  CHECK_FALSE(r.attained);
  r = rset_inf_above(P("gen(0;1;1/2;1)"), Q("1/3"));
  CHECK(r.value == Q("1/2"));
  CHECK(r.attained);
  r = rset_inf_above(P("gen(0;1;1/2;1)"), -1);
  CHECK(r.value == 0);
  CHECK_FALSE(r.attained);
}

TEST_CASE("countability") {
  CHECK(is_countable(P("{1} U gen(0;1;1/2;1)")));
  CHECK_FALSE(is_countable(P("(0,1) minus {1/2}")));
  CHECK(is_countable(P("{}")));
}

TEST_CASE("inflate") {
  CHECK(inflate(P("{0}"), Reach::kRight, Q("1/2")) == P("[0,1/2)"));
  CHECK(inflate(P("{0}"), Reach::kLeft, Q("1/2")) == P("(-1/2,0]"));
  CHECK(inflate(P("[0,1]"), Reach::kTwoSided, 1) == P("(-1,2)"));
  CHECK(inflate(P("gen(0;1;1/2;1)"), Reach::kLeft, Q("1/8")) ==
        P("(3/8,1/2] U (-1/8,1/4]"));
  CHECK(inflate(P("gen(0;1;1/2;1)"), Reach::kRight, Q("1/8")) ==
        P("[1/2,5/8) U [1/4,3/8) U (0,1/4)"));
}

namespace {

// Random small sets built from every kind of part, for pointwise oracles.
RSet random_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<Span> spans;
  CountableSet plus;
  CountableSet minus;
  const int n = coin(rng);
  for (int i = 0; i < n; ++i) {
    Rational a = R(small(rng), 2);
    Rational b = a + R(1 + coin(rng), 2);
    Span s;
    s.lo = coin(rng) % 2 ? Cut::before(a) : Cut::after(a);
    s.hi = coin(rng) % 2 ? Cut::after(b) : Cut::before(b);
    if (coin(rng) == 0) s.lo = Cut::neg_inf();
    spans.push_back(s);
  }
  for (int i = coin(rng); i > 0; --i) plus.points.push_back(R(small(rng), 4));
  for (int i = coin(rng) % 2; i > 0; --i) minus.points.push_back(R(small(rng), 4));
  const Rational ratios[] = {Rational(1, 2), Rational(1, 4), Rational(2, 3)};
  for (int i = coin(rng) % 3; i > 0; --i) {
    SeqGen g{R(small(rng), 2), R(coin(rng) % 2 ? 1 : -1, 1 + coin(rng)), ratios[coin(rng) % 3],
             static_cast<std::uint64_t>(coin(rng))};
    (coin(rng) % 2 ? plus : minus).gens.push_back(g);
  }
  return RSet::build(spans, plus, minus);
}

std::vector<Rational> probes(const RSet& a, const RSet& b) {
  std::vector<Rational> out;
  for (int i = -40; i <= 40; ++i) out.push_back(R(i, 8));
  for (const RSet* s : {&a, &b}) {
    for (const auto* k : {&s->plus(), &s->minus()}) {
      for (const auto& p : k->points) out.push_back(p);
      for (const auto& g : k->gens) {
        out.push_back(g.limit);
        for (std::uint64_t j = g.start; j < g.start + 8; ++j) out.push_back(g.term(j));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("boolean operations agree with pointwise logic") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const RSet a = random_set(rng);
    const RSet b = random_set(rng);
    const RSet u = a | b;
    const RSet i = a & b;
    const RSet d = a - b;
    const RSet c = a.complement();
    for (const auto& x : probes(a, b)) {
      const bool ia = a.contains(x);
      const bool ib = b.contains(x);
      REQUIRE(u.contains(x) == (ia || ib));
      REQUIRE(i.contains(x) == (ia && ib));
      INFO(a.to_string(), " | ", b.to_string(), " | ", format_rational(x), " | ", d.to_string());
      REQUIRE(d.contains(x) == (ia && !ib));
      REQUIRE(c.contains(x) == !ia);
    }
    REQUIRE(RSet::parse(a.to_string()) == a);
    for (Topology t : {Topology::kReal, Topology::kSorgenfreyRight, Topology::kSorgenfreyLeft}) {
      const RSet cl = closure(a, t);
      REQUIRE(a.subset_of(cl));
      REQUIRE(closure(cl, t) == cl);
    }
    REQUIRE(closure(a, Topology::kReal) ==
            (closure(a, Topology::kSorgenfreyRight) | closure(a, Topology::kSorgenfreyLeft)));
  }
}

TEST_CASE("infimum mirrors the supremum of the reflection") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const RSet a = random_set(rng);
    const RSet m = a.reflected();
    for (const auto& t : probes(a, m)) {
      const SupResult inf = rset_inf_above(a, t);
      const SupResult sup = rset_sup_below(m, -t);
      INFO(a.to_string(), " at ", format_rational(t));
      REQUIRE(inf.nonempty == sup.nonempty);
      if (!inf.nonempty) continue;
      REQUIRE((inf.kind == Endpoint::Kind::kFinite) == (sup.kind == Endpoint::Kind::kFinite));
      if (inf.kind != Endpoint::Kind::kFinite) continue;
      REQUIRE(inf.value == -sup.value);
      REQUIRE(inf.attained == sup.attained);
    }
  }
}
