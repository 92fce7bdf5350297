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

#include <stdexcept>
#include <string>
#include <vector>

namespace hybridline {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text, JSON, or structurally invalid input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A set operation left the representable class (e.g. a finite head that
// would exceed the materialization cap).
class NotCanonicalizable : public Error {
 public:
  using Error::Error;
};

// A 4-cover whose parts are not pairwise disjoint.
class OverlapError : public Error {
 public:
  explicit OverlapError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// A bounded search ran out of candidates. This means "not verified", which is
// not the same as a negative answer.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class NotOneSideClosed : public Error {
 public:
  using Error::Error;
};

class LabelError : public Error {
 public:
  using Error::Error;
};

class BoundExhausted : public Error {
 public:
  using Error::Error;
};

class NoFiniteN : public Error {
 public:
  using Error::Error;
};

class SpecInvalid : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hybridline
