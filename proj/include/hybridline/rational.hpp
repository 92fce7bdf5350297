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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hybridline {

// GMP keeps mpq_class in lowest terms with a positive denominator as long as
// every value is produced by arithmetic or by parse_rational().
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q", "-p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

Rational ipow(const Rational& base, std::uint64_t exponent);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

// 2^-k.
Rational dyadic(std::uint64_t k);

// "2^-k" for a dyadic power of two, used when printing radii and distances.
std::string format_dyadic(std::uint64_t k);

}  // namespace hybridline
