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

#pragma once

#include <vector>

#include "hybridline/exactsets.hpp"

namespace hybridline::detail {

struct Split {
  CountableSet inside;
  CountableSet outside;
};

void append(CountableSet& into, const CountableSet& from);

// Smallest k >= g.start with |coeff| * ratio^k < distance.
std::uint64_t first_index_within(const SeqGen& g, const Rational& distance);

Split split_by_spans(const CountableSet& k, const std::vector<Span>& spans);
Split split_by_countable(const CountableSet& a, const CountableSet& b);
Split split_gen_by_points(const SeqGen& g, const std::vector<Rational>& points);
Split split_gen_by_gen(const SeqGen& g, const SeqGen& h);
// Pairwise-disjoint, duplicate-free form of an arbitrary countable set.
CountableSet disjointify(const CountableSet& raw);
void sort_canonical(CountableSet& k);

// Sorted, disjoint, non-touching spans.
std::vector<Span> normalize_spans(std::vector<Span> spans);
std::vector<Span> intersect_spans(const std::vector<Span>& a, const std::vector<Span>& b);
std::vector<Span> complement_spans(const std::vector<Span>& a);
bool spans_contain(const std::vector<Span>& spans, const Rational& x);

}  // namespace hybridline::detail
