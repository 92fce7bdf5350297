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

#include "hybridline/cover.hpp"

#include <algorithm>

#include "hybridline/errors.hpp"

namespace hybridline {

Label label_from_int(long v) {
  if (v < 1 || v > 4) throw PreconditionError("label must be 1..4, got " + std::to_string(v));
  return static_cast<Label>(v);
}

namespace {

std::string gen_text(const SeqGen& g) { return RSet::generator(g).to_string(); }

// Span of the interleaved piece with index i.
Span piece_span(const std::vector<Rational>& bps, std::size_t i) {
  if (i % 2 == 1) return Span::singleton(bps[i / 2]);
  const std::size_t j = i / 2;
  Span s;
  s.lo = j == 0 ? Cut::neg_inf() : Cut::after(bps[j - 1]);
  s.hi = j == bps.size() ? Cut::pos_inf() : Cut::before(bps[j]);
  return s;
}

}  // namespace

Cover validate_cover(FourCover spec) {
  const std::size_t m = spec.breakpoints.size();
  if (spec.piece_labels.size() != 2 * m + 1) {
    throw PreconditionError("piece_labels needs " + std::to_string(2 * m + 1) + " entries, got " +
                            std::to_string(spec.piece_labels.size()));
  }
  for (std::size_t i = 1; i < m; ++i) {
    if (!(spec.breakpoints[i - 1] < spec.breakpoints[i])) {
      throw PreconditionError("breakpoints must be strictly increasing");
    }
  }
  for (Label l : spec.piece_labels) label_from_int(to_int(l));
  for (const auto& [p, l] : spec.point_overrides) label_from_int(to_int(l));
  for (const auto& [g, l] : spec.gen_overrides) {
    label_from_int(to_int(l));
    g.validate();
  }

  std::vector<std::string> violations;
  for (std::size_t i = 0; i < spec.point_overrides.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.point_overrides.size(); ++j) {
      if (spec.point_overrides[i].first == spec.point_overrides[j].first) {
        violations.push_back("point " + format_rational(spec.point_overrides[i].first) + " overridden twice");
      }
    }
  }
  const RSet bps = RSet::points(spec.breakpoints);
  std::vector<Rational> override_points;
  for (const auto& [p, l] : spec.point_overrides) override_points.push_back(p);
  const RSet overrides = RSet::points(override_points);
  for (std::size_t i = 0; i < spec.gen_overrides.size(); ++i) {
    const RSet gi = RSet::generator(spec.gen_overrides[i].first);
    const std::string name = gen_text(spec.gen_overrides[i].first);
    if (auto w = (gi & bps).witness_point()) {
      violations.push_back(name + " hits breakpoint " + format_rational(*w));
    }
    if (auto w = (gi & overrides).witness_point()) {
      violations.push_back(name + " hits override point " + format_rational(*w));
    }
    for (std::size_t j = i + 1; j < spec.gen_overrides.size(); ++j) {
      if (auto w = (gi & RSet::generator(spec.gen_overrides[j].first)).witness_point()) {
        violations.push_back(name + " meets " + gen_text(spec.gen_overrides[j].first) + " at " +
                             format_rational(*w));
      }
    }
  }
  if (!violations.empty()) throw OverlapError(std::move(violations));

  Cover c;
  c.spec_ = std::move(spec);
  const FourCover& s = c.spec_;
  CountableSet carved;
  carved.points = override_points;
  for (const auto& [g, l] : s.gen_overrides) carved.gens.push_back(g);
  for (int li = 1; li <= 4; ++li) {
    const Label l = static_cast<Label>(li);
    std::vector<Span> spans;
    for (std::size_t i = 0; i < s.piece_labels.size(); ++i) {
      if (s.piece_labels[i] == l) spans.push_back(piece_span(s.breakpoints, i));
    }
    CountableSet own;
    for (const auto& [p, pl] : s.point_overrides) {
      if (pl == l) own.points.push_back(p);
    }
    for (const auto& [g, gl] : s.gen_overrides) {
      if (gl == l) own.gens.push_back(g);
    }
    c.regions_[static_cast<std::size_t>(li - 1)] =
        RSet::build(std::move(spans), {}, carved) | RSet::build({}, std::move(own), {});
  }
  return c;
}

Label Cover::label_of(const Rational& x) const {
  for (const auto& [p, l] : spec_.point_overrides) {
    if (p == x) return l;
  }
  for (const auto& [g, l] : spec_.gen_overrides) {
    if (seq_member(g, x)) return l;
  }
  const auto& bps = spec_.breakpoints;
  auto it = std::lower_bound(bps.begin(), bps.end(), x);
  const auto j = static_cast<std::size_t>(it - bps.begin());
  if (it != bps.end() && *it == x) return spec_.piece_labels[2 * j + 1];
  return spec_.piece_labels[2 * j];
}

LocalBaseNbhd Cover::local_base_nbhd(const Rational& x, const Rational& radius) const {
  if (radius <= 0) throw PreconditionError("neighborhood radius must be positive");
  const Label l = label_of(x);
  LocalBaseNbhd out{x, l, radius, {}};
  switch (l) {
    case Label::kTwoSided:
      out.set = RSet::interval(Endpoint::open(x - radius), Endpoint::open(x + radius));
      break;
    case Label::kIsolated:
      out.set = RSet::point(x);
      break;
    case Label::kRight:
      out.set = RSet::interval(Endpoint::closed_at(x), Endpoint::open(x + radius));
      break;
    case Label::kLeft:
      out.set = RSet::interval(Endpoint::open(x - radius), Endpoint::closed_at(x));
      break;
  }
  return out;
}

RSet Cover::closure(const RSet& s) const {
  return s | (region(Label::kTwoSided) & hybridline::closure(s, Topology::kReal)) |
         (region(Label::kRight) & hybridline::closure(s, Topology::kSorgenfreyRight)) |
         (region(Label::kLeft) & hybridline::closure(s, Topology::kSorgenfreyLeft));
}

std::optional<std::uint64_t> Cover::open_level(const RSet& s, const Rational& x, std::uint64_t max_k) const {
  if (!s.contains(x)) return std::nullopt;
  if (label_of(x) == Label::kIsolated) return 0;
  for (std::uint64_t k = 0; k <= max_k; ++k) {
    if (local_base_nbhd(x, dyadic(k)).set.subset_of(s)) return k;
  }
  return std::nullopt;
}

bool is_open_sampled(const Cover& c, const RSet& s, const std::vector<Rational>& samples) {
  for (const auto& x : samples) {
    if (!s.contains(x)) throw PreconditionError("sample " + format_rational(x) + " is not in the set");
    if (!c.open_level(s, x, 64)) {
      throw SearchExhausted("no neighborhood of radius >= 2^-64 at " + format_rational(x) + " fits");
    }
  }
  return true;
}

std::vector<std::string> preset_names() { return {"real-line", "sorgenfrey", "sorgenfrey-left", "hattori"}; }

FourCover preset(const std::string& name) {
  FourCover c;
  if (name == "real-line") {
    c.piece_labels = {Label::kTwoSided};
  } else if (name == "sorgenfrey") {
    c.piece_labels = {Label::kRight};
  } else if (name == "sorgenfrey-left") {
    c.piece_labels = {Label::kLeft};
  } else if (name == "hattori") {
    // Two-sided points on a finite grid and on one sequence, Sorgenfrey
    // neighborhoods everywhere else.
    c.breakpoints = {Rational(-1), Rational(0), Rational(1)};
    c.piece_labels = {Label::kRight, Label::kTwoSided, Label::kRight, Label::kTwoSided,
                      Label::kRight, Label::kTwoSided, Label::kRight};
    c.gen_overrides = {{SeqGen{Rational(0), Rational(1), Rational(1, 2), 1}, Label::kTwoSided}};
  } else {
    throw PreconditionError("unknown preset '" + name + "'");
  }
  return c;
}

}  // namespace hybridline
