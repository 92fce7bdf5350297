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

#include "hybridline/cover_io.hpp"
#include "hybridline/decompose.hpp"
#include "hybridline/errors.hpp"
#include "hybridline/random.hpp"

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

// (-inf,0) -> 1, {0} -> l0, (0,1) -> 3, {1} -> 1, (1,inf) -> 1.
Cover unit_piece(Label l0) {
  FourCover c;
  c.breakpoints = {Q("0"), Q("1")};
  c.piece_labels = {Label::kTwoSided, l0, Label::kRight, Label::kTwoSided, Label::kTwoSided};
  return validate_cover(c);
}

}  // namespace

TEST_CASE("synthesized families on simple covers") {
  Decomposition s = synthesize_decomposition(validate_cover(preset("sorgenfrey")));
  for (std::uint64_t n = 0; n <= 6; ++n) {
    const Rational b(static_cast<unsigned long>(n));
    const RSet expected = n == 0 ? RSet::point(0) : RSet::interval(Endpoint::closed_at(-b), Endpoint::closed_at(b));
    CHECK(s.F(n) == expected);
    CHECK(closure(s.F(n), Topology::kSorgenfreyLeft) == s.F(n));
    CHECK(s.H(n).empty());
  }

  Decomposition u = synthesize_decomposition(unit_piece(Label::kTwoSided));
  for (std::uint64_t n = 0; n <= 6; ++n) {
    CHECK(u.F(n) == RSet::interval(Endpoint::closed_at(dyadic(n + 2)), Endpoint::closed_at(1 - dyadic(n + 2))));
  }

  FourCover g;
  g.piece_labels = {Label::kTwoSided};
  g.gen_overrides = {{SeqGen{1, -1, Q("1/2"), 1}, Label::kRight}};
  Decomposition gd = synthesize_decomposition(validate_cover(g));
  for (std::uint64_t n = 0; n <= 6; ++n) {
    std::vector<Rational> pts;
    for (std::uint64_t k = 1; k <= n + 1; ++k) pts.push_back(1 - dyadic(k));
    CHECK(gd.F(n) == RSet::points(pts));
  }
}

TEST_CASE("carve-outs next to bad points stay closed") {
  FourCover c;
  c.breakpoints = {Q("0"), Q("1")};
  c.piece_labels = {Label::kTwoSided, Label::kTwoSided, Label::kRight, Label::kTwoSided, Label::kTwoSided};
  c.point_overrides = {{Q("1/2"), Label::kTwoSided}};
  c.gen_overrides = {{SeqGen{Q("1/4"), Q("-1/8"), Q("1/2"), 0}, Label::kLeft}};
  Cover cv = validate_cover(c);
  Decomposition d = synthesize_decomposition(cv);
  CHECK(validate_decomposition(cv, d, 24).ok);
  CHECK(d.f_index(Q("1/2") - Q("1/1024")).has_value());
}

TEST_CASE("validation catches broken families") {
  Cover c = unit_piece(Label::kRight);
  Decomposition leak([](std::uint64_t) { return P("[0,1)"); }, [](std::uint64_t) { return RSet(); });
  DecompositionReport r = validate_decomposition(c, leak, 4);
  CHECK_FALSE(r.ok);
  CHECK(r.n == 0);
  CHECK(r.witness == Rational(1));

  Decomposition outside([](std::uint64_t) { return P("[2,3]"); }, [](std::uint64_t) { return RSet(); });
  r = validate_decomposition(c, outside, 4);
  CHECK_FALSE(r.ok);
  CHECK(r.check == "F(n) in A3");
  REQUIRE(r.witness);
  CHECK_FALSE(c.region(Label::kRight).contains(*r.witness));
  CHECK(validate_decomposition(c, synthesize_decomposition(c), 16).ok);
}

TEST_CASE("fuzzed covers: soundness, monotonicity and coverage") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Cover c = validate_cover(fuzz_cover({4, 3, 2, seed}));
    Decomposition d = synthesize_decomposition(c);
    const DecompositionReport r = validate_decomposition(c, d, 16);
    INFO("seed ", seed, ": ", r.describe(), " cover ", serialize_cover(c.spec()));
    REQUIRE(r.ok);
    for (std::uint64_t n = 0; n < 8; ++n) {
      REQUIRE(d.F(n).subset_of(d.F(n + 1)));
      REQUIRE(d.H(n).subset_of(d.H(n + 1)));
    }
    SplitMix64 rng(seed);
    for (bool f_side : {true, false}) {
      const RSet& target = c.region(f_side ? Label::kRight : Label::kLeft);
      for (const auto& x : sample_members(target, rng, 40)) {
        const auto idx = f_side ? d.f_index(x) : d.h_index(x);
        INFO("x = ", format_rational(x));
        REQUIRE(idx.has_value());
        REQUIRE(*idx < 200);
        REQUIRE((f_side ? d.F(*idx) : d.H(*idx)).contains(x));
        if (*idx > 0) REQUIRE_FALSE((f_side ? d.F(*idx - 1) : d.H(*idx - 1)).contains(x));
      }
    }
  }
}

TEST_CASE("G-delta extraction") {
  GdeltaCertificate a = gdelta_extract(P("[0,1]"), Topology::kSorgenfreyRight);
  CHECK(a.defect().empty());
  CHECK(a.open_family(3) == P("(-1/8,9/8)"));

  GdeltaCertificate b = gdelta_extract(P("gen(0;1;1/2;1) U {0}"), Topology::kSorgenfreyRight);
  CHECK(b.defect().empty());

  GdeltaCertificate c = gdelta_extract(P("[0,1)"), Topology::kSorgenfreyRight);
  CHECK(c.real_closure() == P("[0,1]"));
  CHECK(c.defect() == P("{1}"));
  CHECK(is_countable(c.defect()));
  CHECK(c.open_family(2) == P("(-1/4,1) U (1,5/4)"));

  CHECK_THROWS_AS(gdelta_extract(P("(0,1]"), Topology::kSorgenfreyRight), NotOneSideClosed);
  CHECK_THROWS_AS(gdelta_extract(P("gen(0;1;1/2;1)"), Topology::kSorgenfreyRight), NotOneSideClosed);
  CHECK_NOTHROW(gdelta_extract(P("(0,1]"), Topology::kSorgenfreyLeft));
  CHECK_THROWS_AS(gdelta_extract(P("[0,1]"), Topology::kReal), PreconditionError);

  GdeltaCertificate d = gdelta_extract(P("[0,1) U [2,3) U [-1/2,-1/3) U gen(5;-1;1/2;0)"), Topology::kSorgenfreyRight);
  CHECK(d.defect_points(10) == std::vector<Rational>{Q("1"), Q("-1/3"), Q("3"), Q("5")});
  CHECK(d.defect_index(Q("3")) == 2u);
  CHECK_FALSE(d.defect_index(Q("1/2")));
  for (const char* y : {"0", "1/2", "2", "-1/2", "9/2"}) {
    for (std::uint64_t n = 0; n <= 32; ++n) CHECK(d.open_family(n).contains(Q(y)));
  }
  for (std::uint64_t n = 4; n <= 32; ++n) {
    for (const char* y : {"1", "-1/3", "3", "5"}) CHECK_FALSE(d.open_family(n).contains(Q(y)));
  }
}

TEST_CASE("classification") {
  Verdict s = classify(validate_cover(preset("sorgenfrey")));
  CHECK(s.quasi_metrizable);
  CHECK_FALSE(s.metrizable_sufficient);
  REQUIRE(s.second_countable.has_value());
  CHECK_FALSE(*s.second_countable);

  Verdict r = classify(validate_cover(preset("real-line")));
  CHECK(r.quasi_metrizable);
  CHECK(r.metrizable_sufficient);
  CHECK(r.second_countable == true);

  FourCover g;
  g.piece_labels = {Label::kTwoSided};
  g.gen_overrides = {{SeqGen{0, 1, Q("1/2"), 1}, Label::kRight}};
  g.point_overrides = {{Q("5"), Label::kLeft}};
  Verdict gv = classify(validate_cover(g));
  CHECK(gv.quasi_metrizable);
  CHECK(gv.metrizable_sufficient);
  CHECK(gv.second_countable == true);

  FourCover iso;
  iso.breakpoints = {Q("0")};
  iso.piece_labels = {Label::kIsolated, Label::kTwoSided, Label::kTwoSided};
  Verdict iv = classify(validate_cover(iso));
  CHECK(iv.metrizable_sufficient);
  CHECK_FALSE(iv.second_countable.has_value());
}
