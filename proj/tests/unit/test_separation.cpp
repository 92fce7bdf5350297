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
#include "hybridline/errors.hpp"
#include "hybridline/separation.hpp"

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
Cover C(const char* name) { return validate_cover(preset(name)); }

}  // namespace

TEST_CASE("separating neighborhoods") {
  const SepNbhd a = sep_nbhd(C("real-line"), 0, P("[1,2]"));
  CHECK(a.n_of_c == 1);
  CHECK(a.set == P("(-1/2,1/2)"));

  const SepNbhd b = sep_nbhd(C("sorgenfrey"), 0, P("gen(0;-1;1/2;0)"));
  CHECK(b.n_of_c == 1);
  CHECK(b.set == P("[0,1/2)"));

  const SepNbhd c = sep_nbhd(C("real-line"), 0, P("{-1/3} U [5/2,3]"));
  CHECK(c.n_of_c == 3);
  CHECK(c.set == P("(-1/6,1/6)"));

  const SepNbhd d = sep_nbhd(C("sorgenfrey"), 1, P("[0,1)"));
  CHECK(d.n_of_c == 1);
  CHECK(d.set == P("[1,3/2)"));

  FourCover iso;
  iso.breakpoints = {Q("0")};
  iso.piece_labels = {Label::kTwoSided, Label::kIsolated, Label::kTwoSided};
  const SepNbhd e = sep_nbhd(validate_cover(iso), 0, P("(0,1)"));
  CHECK(e.set == RSet::point(0));

  CHECK_THROWS_AS(sep_nbhd(C("real-line"), 0, P("(0,1)")), NoFiniteN);
  CHECK_THROWS_AS(sep_nbhd(C("sorgenfrey"), 0, P("gen(0;1;1/2;0)")), NoFiniteN);
  CHECK_THROWS_AS(sep_nbhd(C("real-line"), 0, P("[0,1]")), PreconditionError);
}

TEST_CASE("half-radius law") {
  Cover c = C("hattori");
  for (const char* p : {"-3", "-1", "-1/2", "0", "1/3", "1", "5/2"}) {
    const SepNbhd s = sep_nbhd(c, Q(p), P("{-9} U [7,8]"));
    Rational half(Integer(1), 2 * s.n_of_c);
    half.canonicalize();
    CHECK(s.set == c.local_base_nbhd(Q(p), half).set);
  }
}

TEST_CASE("normality checks") {
  Cover r = C("real-line");
  const NormalityReport a = check_normality(r, P("{0}"), P("[1,2]"), {Q("0")}, {Q("1"), Q("3/2"), Q("2")});
  CHECK(a.ok());
  CHECK(a.pairs_checked == 3);

  Cover s = C("sorgenfrey");
  const NormalityReport b =
      check_normality(s, P("[0,1)"), P("{1}"), {Q("0"), Q("1/2"), Q("15/16"), Q("1023/1024")}, {Q("1")});
  CHECK(b.ok());

  const NormalityReport c = check_normality(r, P("[0,1]"), P("[1,2]"), {Q("0")}, {Q("2")});
  REQUIRE(c.overlap);
  CHECK(*c.overlap == Rational(1));
  CHECK(c.pairs_checked == 0);
  CHECK_FALSE(c.ok());

  const NormalityReport d = check_normality(r, P("[0,1)"), P("{1}"), {Q("1/2")}, {Q("1")});
  CHECK_FALSE(d.ok());
  CHECK(d.errors.size() == 1);
}

TEST_CASE("fuzzed closed pairs separate") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Cover c = validate_cover(fuzz_cover({4, 3, 2, seed}));
    SplitMix64 rng(seed);
    const auto [c0, c1] = fuzz_closed_pair(c, rng);
    INFO("seed ", seed, " C0 = ", c0.to_string(), " C1 = ", c1.to_string());
    REQUIRE(c.closure(c0) == c0);
    REQUIRE(c.closure(c1) == c1);
    REQUIRE((c0 & c1).empty());
    const NormalityReport r =
        check_normality(c, c0, c1, sample_with_boundary(c0, rng, 12), sample_with_boundary(c1, rng, 12));
    CHECK(r.errors.empty());
    CHECK(r.intersecting.empty());
    CHECK(r.pairs_checked > 0);
  }
}

TEST_CASE("urysohn functions") {
  const UrysohnSpec right{0, Label::kRight, 1, P("[1,2]")};
  CHECK(urysohn_eval(right, Q("1/2")) == 0);
  CHECK(urysohn_eval(right, Q("3/4")) == Q("1/2"));
  CHECK(urysohn_eval(right, Q("-1/1000000000")) == 1);
  CHECK(urysohn_eval(right, 0) == 0);
  CHECK(urysohn_eval(right, 1) == 1);

  const UrysohnSpec left{0, Label::kLeft, 1, P("[1,2]")};
  CHECK(urysohn_eval(left, Q("-3/4")) == Q("1/2"));
  CHECK(urysohn_eval(left, Q("1/1000")) == 1);

  const UrysohnSpec tent{0, Label::kTwoSided, Q("1/2"), P("{1/2}")};
  CHECK(urysohn_eval(tent, Q("-3/8")) == Q("1/2"));
  CHECK(urysohn_eval(tent, Q("1/4")) == 0);

  const UrysohnSpec iso{0, Label::kIsolated, 1, P("(0,1)")};
  CHECK(urysohn_eval(iso, 0) == 0);
  CHECK(urysohn_eval(iso, Q("1/7")) == 1);

  const UrysohnSpec bad{0, Label::kTwoSided, 1, P("{1/2}")};
  CHECK_THROWS_AS(urysohn_eval(bad, 0), SpecInvalid);
  CHECK_THROWS_AS(make_urysohn(C("real-line"), 0, P("{1/2}"), Rational(1)), SpecInvalid);
}

TEST_CASE("epsilon choice") {
  CHECK(choose_epsilon(C("sorgenfrey"), 0, P("[1,2]")) == 1);
  CHECK(choose_epsilon(C("real-line"), 0, P("{1/2}")) == Q("1/2"));
  CHECK(choose_epsilon(C("sorgenfrey"), 0, P("(-1,0)")) == 1);
  CHECK_THROWS_AS(choose_epsilon(C("real-line"), 0, P("[0,1]")), PreconditionError);
  CHECK_THROWS_AS(choose_epsilon(C("real-line"), 0, P("(0,1)")), NoFiniteN);
  const UrysohnSpec u = make_urysohn(C("sorgenfrey"), 0, P("(-1,0) U [1,2]"));
  CHECK(u.label == Label::kRight);
  CHECK(u.epsilon == 1);
}

TEST_CASE("urysohn functions are continuous and separate") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Cover c = validate_cover(fuzz_cover({4, 3, 2, seed}));
    SplitMix64 rng(seed + 7);
    const auto [e, other] = fuzz_closed_pair(c, rng);
    const std::vector<Rational> xs = sample_with_boundary(other, rng, 3);
    for (const auto& x : xs) {
      const UrysohnSpec u = make_urysohn(c, x, e);
      INFO("seed ", seed, " x = ", format_rational(x), " E = ", e.to_string());
      CHECK(urysohn_eval(u, x) == 0);
      for (const auto& t : sample_with_boundary(e, rng, 10)) CHECK(urysohn_eval(u, t) == 1);
      std::vector<Rational> probes = sample_points(c, rng, 12);
      for (const Rational& d : std::vector<Rational>{0, u.epsilon / 2, u.epsilon, -u.epsilon / 2, -u.epsilon}) {
        probes.push_back(x + d);
      }
      for (const auto& t : probes) {
        const Rational v = urysohn_eval(u, t);
        CHECK(v >= 0);
        CHECK(v <= 1);
      }
      CHECK(check_continuity(c, u, probes, 6, rng, 20).empty());
    }
  }
}
