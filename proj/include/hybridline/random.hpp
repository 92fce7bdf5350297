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

// SplitMix64 and the sampling helpers built on it. All draws are defined
// bit-for-bit here so other implementations can replay a seed exactly.

#include <cstdint>
#include <vector>

#include "hybridline/cover.hpp"

namespace hybridline {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, bound); draws above the largest multiple of bound are
  // rejected. bound == 0 returns 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  // An independent stream keyed by `stream`.
  SplitMix64 fork(std::uint64_t stream);

 private:
  std::uint64_t state_;
};

// p/q with q in 1..max_den and p/q in [lo, hi].
Rational random_rational(SplitMix64& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den);

// Points of s: inside its intervals (within 8 of a finite end for rays), its
// plus points and early generator terms. Empty when s is empty.
std::vector<Rational> sample_members(const RSet& s, SplitMix64& rng, std::size_t count);

// A mixture of plain rationals, breakpoints, override points, generator
// terms and points just beside them.
std::vector<Rational> sample_points(const Cover& c, SplitMix64& rng, std::size_t count);

// x plus or minus a random multiple of a random power of two.
Rational nudge(const Rational& x, SplitMix64& rng, std::uint64_t max_shift);

}  // namespace hybridline
