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
#include "hybridline/qbase.hpp"
#include "hybridline/random.hpp"

using namespace hybridline;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

bool span_subset(const Span& a, const Span& b) { return a.empty() || (b.lo <= a.lo && a.hi <= b.hi); }

Cover unit_piece(Label l0) {
  FourCover c;
  c.breakpoints = {Q("0"), Q("1")};
  c.piece_labels = {Label::kTwoSided, l0, Label::kRight, Label::kTwoSided, Label::kTwoSided};
  return validate_cover(c);
}

}  // namespace

TEST_CASE("rational enumeration") {
  const char* head[] = {"0", "1", "-1", "1/2", "-1/2", "2", "-2", "1/3", "-1/3", "3/2", "-3/2", "2/3"};
  for (std::uint64_t i = 0; i < std::size(head); ++i) CHECK(RationalEnum::at(i) == Q(head[i]));
  for (std::uint64_t i = 0; i < 3000; ++i) CHECK(RationalEnum::index_of(RationalEnum::at(i)) == Integer(i));
  CHECK(RationalEnum::index_of(Q("1/9")) == Integer(511));
  CHECK(RationalEnum::index_of(Q("-1/9")) == Integer(512));
  CHECK_THROWS_AS(RationalEnum::calkin_wilf(0), PreconditionError);
}

TEST_CASE("family schedule") {
  CHECK(family_at(0) == FamilyDescriptor::discrete());
  CHECK(family_at(1) == FamilyDescriptor::interval_grid(0));
  CHECK(family_at(2) == FamilyDescriptor::right_grid(0));
  CHECK(family_at(3) == FamilyDescriptor::left_grid(0));
  CHECK(family_at(8) == FamilyDescriptor::right_grid(2));
  std::size_t counts[3] = {0, 0, 0};
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const FamilyDescriptor f = family_at(i);
    REQUIRE(family_index(f) == i);
    if (f.kind == FamilyDescriptor::Kind::kIntervalGrid) ++counts[0];
    if (f.kind == FamilyDescriptor::Kind::kRightGrid) ++counts[1];
    if (f.kind == FamilyDescriptor::Kind::kLeftGrid) ++counts[2];
  }
  for (std::size_t c : counts) CHECK(c >= 3333);
  CHECK_FALSE(family_index(FamilyDescriptor::interval(0, 1)));
  CHECK(family_at(7).to_string() == "Wgrid(2)");
  CHECK(FamilyDescriptor::right_rays(Q("1/2"), 3).to_string() == "U(1/2,3)");
}

TEST_CASE("grid helpers") {
  CHECK(grid_above(Q("0"), 1) == Q("1/2"));
  CHECK(grid_above(Q("1/3"), 2) == Q("1/2"));
  CHECK(grid_below(Q("0"), 1) == Q("-1/2"));
  CHECK(grid_below(Q("-1/3"), 2) == Q("-1/2"));
  CHECK(grid_cell(Q("1/3"), 2) == Span{Cut::after(Q("1/4")), Cut::before(Q("1/2"))});
  CHECK(grid_cell(Q("1/4"), 2) == Span{Cut::after(Q("0")), Cut::before(Q("1/2"))});
}

TEST_CASE("minimal neighborhoods on presets") {
  Cover s = validate_cover(preset("sorgenfrey"));
  Decomposition sd = synthesize_decomposition(s);
  CHECK(min_nbhd_span(s, sd, FamilyDescriptor::right_grid(0), Q("0")) == Span{Cut::before(0), Cut::before(1)});
  CHECK(min_nbhd_span(s, sd, FamilyDescriptor::right_grid(0), Q("1/2")) == Span{Cut::before(0), Cut::before(1)});
  CHECK(min_nbhd_span(s, sd, FamilyDescriptor::right_grid(1), Q("1/3")) ==
        Span{Cut::before(Q("1/3")), Cut::before(Q("1/2"))});
  CHECK(min_nbhd_span(s, sd, FamilyDescriptor::left_grid(4), Q("1/3")) == Span::real_line());
  CHECK(min_nbhd_span(s, sd, FamilyDescriptor::discrete(), Q("1/3")) == Span::real_line());
  CHECK(min_nbhd_span(s, sd, FamilyDescriptor::right_rays(Q("5"), 2), Q("5/2")) ==
        Span{Cut::before(Q("2")), Cut::before(Q("5"))});
  CHECK(min_nbhd_span(s, sd, FamilyDescriptor::right_rays(Q("5"), 2), Q("6")) == Span::real_line());
  CHECK(min_nbhd_span(s, sd, FamilyDescriptor::interval(0, 1), Q("1/2")) == Span{Cut::after(0), Cut::before(1)});
  CHECK(min_nbhd_span(s, sd, FamilyDescriptor::interval(0, 1), Q("1")) == Span::real_line());
  CHECK(min_nbhd_level(s, sd, 5, Q("1/3")) == RSet::parse("[1/3,1/2)"));

  FourCover iso;
  iso.breakpoints = {Q("0")};
  iso.piece_labels = {Label::kTwoSided, Label::kIsolated, Label::kTwoSided};
  Cover ic = validate_cover(iso);
  Decomposition id = synthesize_decomposition(ic);
  CHECK(min_nbhd_level(ic, id, 0, Q("0")) == RSet::point(0));
  CHECK(min_nbhd_level(ic, id, 0, Q("1")) == RSet::real_line());
}

TEST_CASE("levels nest, center and absorb their members") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Cover c = validate_cover(fuzz_cover({4, 3, 2, seed}));
    Decomposition d = synthesize_decomposition(c);
    SplitMix64 rng(seed);
    const std::vector<Rational> pts = sample_points(c, rng, 30);
    INFO("seed ", seed, " cover ", serialize_cover(c.spec()));
    for (const auto& x : pts) {
      Span prev = Span::real_line();
      for (std::uint64_t n = 0; n <= 20; ++n) {
        const Span m = min_nbhd_level_span(c, d, n, x);
        INFO("x = ", format_rational(x), " n = ", n);
        REQUIRE(m.contains(x));
        REQUIRE(span_subset(m, prev));
        prev = m;
        for (const auto& y : pts) {
          if (m.contains(y)) REQUIRE(span_subset(min_nbhd_level_span(c, d, n, y), m));
        }
      }
    }
  }
}

TEST_CASE("interior preservation") {
  Cover c = unit_piece(Label::kRight);
  Decomposition honest = synthesize_decomposition(c);
  const std::vector<Rational> probes = {Q("-1"), Q("0"), Q("1/8"), Q("1/2"), Q("7/8"), Q("1"), Q("3/2")};
  for (std::uint64_t i = 0; i < 40; ++i) {
    const InteriorReport r = verify_interior_preserving(c, honest, family_at(i), probes);
    INFO(family_at(i).to_string(), ": ", r.failures.empty() ? "" : r.failures.front());
    CHECK(r.ok);
  }
  CHECK(verify_interior_preserving(c, honest, FamilyDescriptor::right_rays(Q("2"), 3), probes).ok);

  Decomposition leak([](std::uint64_t) { return RSet::parse("[0,1)"); }, [](std::uint64_t) { return RSet(); });
  const InteriorReport bad = verify_interior_preserving(c, leak, FamilyDescriptor::right_rays(Q("2"), 0), {Q("3/2")});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures.front().find("endpoint 1") != std::string::npos);
}
