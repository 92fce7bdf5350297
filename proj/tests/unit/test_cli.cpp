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

#include <cstdlib>

#include "hybridline/cover_io.hpp"
#include "hybridline/errors.hpp"
#include "hybridline/suite.hpp"

using namespace hybridline;

namespace {

std::vector<NamedCover> fuzzed(std::uint64_t count) {
  std::vector<NamedCover> out;
  for (std::uint64_t s = 0; s < count; ++s) out.push_back({"fuzz:" + std::to_string(s), validate_cover(fuzz_cover({4, 3, 2, s}))});
  return out;
}

}  // namespace

TEST_CASE("suite runs are clean and deterministic") {
  SuiteConfig cfg;
  cfg.seed = 5;
  cfg.samples = 30;
  cfg.levels = 12;
  const auto covers = fuzzed(3);
  const SuiteResult a = run_suite(cfg, covers);
  const SuiteResult b = run_suite(cfg, covers);
  CHECK(a.exit_code() == 0);
  CHECK(a.records == b.records);
  REQUIRE_FALSE(a.records.empty());
  CHECK(a.records.front().rfind(R"({"suite":"axioms","cover_id":"fuzz:0","check":"identity","witness":null,"status":"pass"})", 0) == 0);

  cfg.seed = 6;
  CHECK(run_suite(cfg, covers).records.size() == a.records.size());
}

TEST_CASE("suite selection and empty runs") {
  SuiteConfig cfg;
  cfg.samples = 0;
  const SuiteResult empty = run_suite(cfg, fuzzed(2));
  CHECK(empty.records.empty());
  CHECK(empty.exit_code() == 0);

  cfg.samples = 20;
  cfg.suite = "decomposition";
  const SuiteResult d = run_suite(cfg, fuzzed(2));
  for (const auto& r : d.records) CHECK(r.find(R"("suite":"decomposition")") != std::string::npos);

  cfg.suite = "bogus";
  CHECK_THROWS_AS(run_suite(cfg, fuzzed(1)), PreconditionError);
}

TEST_CASE("corrupted runs report witnesses") {
  SuiteConfig cfg;
  cfg.samples = 40;
  cfg.levels = 8;
  cfg.corrupt = true;
  std::vector<NamedCover> covers = {{"sorgenfrey", validate_cover(preset("sorgenfrey"))}};
  for (const char* suite : {"axioms", "decomposition"}) {
    cfg.suite = suite;
    const SuiteResult r = run_suite(cfg, covers);
    CHECK(r.exit_code() != 0);
    bool witnessed = false;
    for (const auto& rec : r.records) witnessed |= rec.find(R"("status":"fail")") != std::string::npos;
    CHECK(witnessed);
  }
}

TEST_CASE("extractor exhaustion is not a violation") {
  SuiteConfig cfg;
  cfg.suite = "extractor";
  cfg.samples = 40;
  const SuiteResult r = run_suite(cfg, {{"sorgenfrey", validate_cover(preset("sorgenfrey"))}});
  CHECK(r.exit_code() == 0);
  REQUIRE_FALSE(r.records.empty());
  CHECK(r.records.front().find(R"("status":"exhausted")") != std::string::npos);
}

TEST_CASE("level cap from the environment") {
  unsetenv("HYBRIDLINE_MAX_LEVEL");
  CHECK(env_max_level() == 64);
  setenv("HYBRIDLINE_MAX_LEVEL", "12", 1);
  CHECK(env_max_level() == 12);
  setenv("HYBRIDLINE_MAX_LEVEL", "12x", 1);
  CHECK_THROWS_AS(env_max_level(), ParseError);
  unsetenv("HYBRIDLINE_MAX_LEVEL");
}
