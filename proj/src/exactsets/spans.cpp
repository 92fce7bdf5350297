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

namespace {

int rank(Cut::Kind k) {
  switch (k) {
    case Cut::Kind::kNegInf:
      return 0;
    case Cut::Kind::kBefore:
    case Cut::Kind::kAfter:
      return 1;
    case Cut::Kind::kPosInf:
      return 2;
  }
  return 0;
}

}  // namespace

std::strong_ordering operator<=>(const Cut& a, const Cut& b) {
  const int ra = rank(a.kind);
  const int rb = rank(b.kind);
  if (ra != rb) return ra <=> rb;
  if (ra != 1) return std::strong_ordering::equal;
  const int c = cmp(a.value, b.value);
  if (c != 0) return c <=> 0;
  return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
}

Cut Cut::reflected() const {
  switch (kind) {
    case Kind::kNegInf:
      return pos_inf();
    case Kind::kPosInf:
      return neg_inf();
    case Kind::kBefore:
      return after(-value);
    case Kind::kAfter:
      return before(-value);
  }
  return *this;
}

Interval Interval::make(Endpoint lo, Endpoint hi) {
  if (lo.kind == Endpoint::Kind::kPosInf || hi.kind == Endpoint::Kind::kNegInf) {
    throw PreconditionError("interval endpoints out of order");
  }
  if ((!lo.finite() && lo.closed) || (!hi.finite() && hi.closed)) {
    throw PreconditionError("infinite endpoints are never closed");
  }
  if (lo.finite() && hi.finite() && !(lo.value < hi.value)) {
    throw PreconditionError("interval needs lo < hi; use a point for singletons");
  }
  return {std::move(lo), std::move(hi)};
}

bool Interval::contains(const Rational& x) const { return Span::from_interval(*this).contains(x); }

Span Span::from_interval(const Interval& iv) {
  Span s;
  if (iv.lo.kind == Endpoint::Kind::kNegInf) {
    s.lo = Cut::neg_inf();
  } else {
    s.lo = iv.lo.closed ? Cut::before(iv.lo.value) : Cut::after(iv.lo.value);
  }
  if (iv.hi.kind == Endpoint::Kind::kPosInf) {
    s.hi = Cut::pos_inf();
  } else {
    s.hi = iv.hi.closed ? Cut::after(iv.hi.value) : Cut::before(iv.hi.value);
  }
  return s;
}

bool Span::is_singleton() const {
  return lo.kind == Cut::Kind::kBefore && hi.kind == Cut::Kind::kAfter && lo.value == hi.value;
}

Span Span::intersect(const Span& other) const {
  return {std::max(lo, other.lo), std::min(hi, other.hi)};
}

Interval Span::to_interval() const {
  Interval iv;
  switch (lo.kind) {
    case Cut::Kind::kNegInf:
      iv.lo = Endpoint::neg_inf();
      break;
    case Cut::Kind::kBefore:
      iv.lo = Endpoint::closed_at(lo.value);
      break;
    default:
      iv.lo = Endpoint::open(lo.value);
      break;
  }
  switch (hi.kind) {
    case Cut::Kind::kPosInf:
      iv.hi = Endpoint::pos_inf();
      break;
    case Cut::Kind::kAfter:
      iv.hi = Endpoint::closed_at(hi.value);
      break;
    default:
      iv.hi = Endpoint::open(hi.value);
      break;
  }
  return iv;
}

namespace detail {

std::vector<Span> normalize_spans(std::vector<Span> spans) {
  std::erase_if(spans, [](const Span& s) { return s.empty(); });
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });
  std::vector<Span> out;
  for (auto& s : spans) {
    if (!out.empty() && s.lo <= out.back().hi) {
      if (out.back().hi < s.hi) out.back().hi = s.hi;
    } else {
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Span> intersect_spans(const std::vector<Span>& a, const std::vector<Span>& b) {
  std::vector<Span> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    Span s = a[i].intersect(b[j]);
    if (!s.empty()) out.push_back(s);
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

std::vector<Span> complement_spans(const std::vector<Span>& a) {
  std::vector<Span> out;
  Cut cursor = Cut::neg_inf();
  for (const auto& s : a) {
    if (cursor < s.lo) out.push_back({cursor, s.lo});
    cursor = s.hi;
  }
  if (cursor < Cut::pos_inf()) out.push_back({cursor, Cut::pos_inf()});
  return out;
}

bool spans_contain(const std::vector<Span>& spans, const Rational& x) {
  const Cut probe = Cut::before(x);
  auto it = std::upper_bound(spans.begin(), spans.end(), probe,
                             [](const Cut& c, const Span& s) { return c < s.lo; });
  if (it == spans.begin()) return false;
  return std::prev(it)->contains(x);
}

}  // namespace detail
}  // namespace hybridline
