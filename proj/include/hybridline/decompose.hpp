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

// Witness families for quasi-metrizability of a hybrid line.
//
// F(n) are subsets of A3 whose left-Sorgenfrey closures stay inside A2 ∪ A3,
// H(n) the mirror image for A4, and together they exhaust A3 and A4.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hybridline/cover.hpp"

namespace hybridline {

class Decomposition {
 public:
  using Rule = std::function<RSet(std::uint64_t)>;
  using IndexRule = std::function<std::optional<std::uint64_t>(const Rational&)>;

  // Without index rules, indices are found by scanning F(0), F(1), ...
  Decomposition(Rule f, Rule h, IndexRule f_index = {}, IndexRule h_index = {});

  const RSet& F(std::uint64_t n) const;
  const RSet& H(std::uint64_t n) const;

  // Some n with x in F(n) (resp. H(n)); the synthesized families return the
  // smallest such n.
  std::optional<std::uint64_t> f_index(const Rational& x, std::uint64_t max_scan = 64) const;
  std::optional<std::uint64_t> h_index(const Rational& x, std::uint64_t max_scan = 64) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::uint64_t, RSet> f;
    std::map<std::uint64_t, RSet> h;
  };

  Rule f_;
  Rule h_;
  IndexRule f_index_;
  IndexRule h_index_;
  std::shared_ptr<Cache> cache_;
};

Decomposition synthesize_decomposition(const Cover& c);

struct DecompositionReport {
  bool ok = true;
  std::uint64_t n = 0;
  std::string check;
  std::optional<Rational> witness;

  std::string describe() const;
};

// Checks F(n) ⊆ A3, cl_left(F(n)) ⊆ A2 ∪ A3, H(n) ⊆ A4 and
// cl_right(H(n)) ⊆ A2 ∪ A4 for every n <= n_max; stops at the first failure.
DecompositionReport validate_decomposition(const Cover& c, const Decomposition& d, std::uint64_t n_max);

// A set closed in one Sorgenfrey topology written as a countable intersection
// of open sets of the real line.
class GdeltaCertificate {
 public:
  const RSet& set() const { return f_; }
  const RSet& real_closure() const { return closure_; }
  // closure minus set; always countable.
  const RSet& defect() const { return defect_; }

  // First `count` defect points ordered by (|numerator| + denominator, value).
  std::vector<Rational> defect_points(std::size_t count) const;
  // Position of y in that order, if y is a defect point.
  std::optional<std::size_t> defect_index(const Rational& y) const;
  // The 2^-n inflation of the closure minus the first n defect points.
  RSet open_family(std::uint64_t n) const;

 private:
  friend GdeltaCertificate gdelta_extract(const RSet& f, Topology side);
  // Defect points of height <= bound, sorted.
  std::vector<Rational> defect_up_to(const Integer& bound) const;

  RSet f_;
  RSet closure_;
  RSet defect_;
};

// Throws NotOneSideClosed unless closure(f, side) == f, and
// PreconditionError for side == kReal.
GdeltaCertificate gdelta_extract(const RSet& f, Topology side);

struct Verdict {
  bool quasi_metrizable = true;
  std::shared_ptr<Decomposition> witness;
  bool metrizable_sufficient = false;
  std::optional<bool> second_countable;
};

Verdict classify(const Cover& c);

}  // namespace hybridline
