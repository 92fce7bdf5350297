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

#include "hybridline/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <optional>

#include "hybridline/decompose.hpp"
#include "hybridline/errors.hpp"
#include "hybridline/qmetric.hpp"
#include "hybridline/random.hpp"
#include "hybridline/separation.hpp"

namespace hybridline {

namespace {

using json = nlohmann::ordered_json;

struct Check {
  explicit Check(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::optional<std::string> witness;
  bool exhausted = false;

  void fail(std::string w) {
    if (!witness) witness = std::move(w);
  }
};

class Recorder {
 public:
  Recorder(SuiteResult& out, std::string suite, std::string cover_id)
      : out_(out), suite_(std::move(suite)), cover_id_(std::move(cover_id)) {}

  void emit(const Check& c) {
    if (c.checked == 0 && !c.witness) return;
    json rec;
    rec["suite"] = suite_;
    rec["cover_id"] = cover_id_;
    rec["check"] = c.name;
    rec["witness"] = c.witness ? json(*c.witness) : json(nullptr);
    rec["status"] = c.witness ? "fail" : c.exhausted ? "exhausted" : "pass";
    if (c.witness) ++out_.violations;
    out_.records.push_back(rec.dump());
  }

  // Runs body and turns a library error into a failed check.
  void guarded(Check& c, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      c.fail(std::string("error: ") + e.what());
    }
    emit(c);
  }

 private:
  SuiteResult& out_;
  std::string suite_;
  std::string cover_id_;
};

std::string fmt(const Rational& q) { return format_rational(q); }

Decomposition corrupted(const Cover& c, const Decomposition& honest) {
  const std::optional<Rational> not_right = (RSet::real_line() - c.region(Label::kRight)).witness_point();
  const std::optional<Rational> not_left = (RSet::real_line() - c.region(Label::kLeft)).witness_point();
  auto f = [honest, not_right](std::uint64_t n) { return not_right ? honest.F(n) | RSet::point(*not_right) : honest.F(n); };
  auto h = [honest, not_right, not_left](std::uint64_t n) {
    return !not_right && not_left ? honest.H(n) | RSet::point(*not_left) : honest.H(n);
  };
  return Decomposition(f, h);
}

QuasiMetric build_metric(const Cover& c, bool corrupt) {
  if (!corrupt) return make_quasi_metric(c);
  return QuasiMetric(c, synthesize_decomposition(c), [](std::uint64_t n, const Rational& x, const Span&) {
    return Span{Cut::after(x - dyadic(n)), Cut::before(x + dyadic(n))};
  });
}

void suite_axioms(const SuiteConfig& cfg, const QuasiMetric& qm, std::uint64_t seed, Recorder& rec) {
  Check identity("identity");
  Check ultra("ultrametric");
  Check* checks[] = {&identity, &ultra};
  try {
    const AxiomReport r = check_axioms(qm, seed, cfg.samples);
    identity.checked = ultra.checked = r.checked;
    for (const auto& v : r.violations) {
      (v.axiom == "identity" ? identity : ultra)
          .fail("x=" + fmt(v.x) + " y=" + fmt(v.y) + " z=" + fmt(v.z) + " " + v.detail);
    }
  } catch (const Error& e) {
    identity.fail(std::string("error: ") + e.what());
  }
  for (Check* c : checks) rec.emit(*c);
}

void suite_balls(const SuiteConfig& cfg, const QuasiMetric& qm, SplitMix64 rng, Recorder& rec) {
  Check kernel("ball equals level kernel");
  Check agree("ball membership matches distance");
  const std::vector<Rational> xs = sample_points(qm.cover(), rng, cfg.samples);
  rec.guarded(kernel, [&] {
    for (const auto& x : xs) {
      const std::vector<Span> balls = qm.level_spans(cfg.levels, x);
      for (std::uint64_t n = 0; n <= cfg.levels; ++n) {
        ++kernel.checked;
        if (!(RSet::from_spans({balls[n]}) == min_nbhd_level(qm.cover(), qm.decomposition(), n, x))) {
          kernel.fail("x=" + fmt(x) + " n=" + std::to_string(n));
        }
      }
    }
  });
  rec.guarded(agree, [&] {
    for (const auto& x : xs) {
      for (int j = 0; j < 4; ++j) {
        const Rational y = j == 0 ? xs[rng.below(xs.size())] : nudge(x, rng, 12);
        const DyadicDistance d = qm.qdist(x, y).distance;
        const std::vector<Span> balls = qm.level_spans(cfg.levels, x);
        for (std::uint64_t n = 0; n <= cfg.levels; ++n) {
          ++agree.checked;
          if (balls[n].contains(y) != (d < DyadicDistance::pow2(n))) {
            agree.fail("x=" + fmt(x) + " y=" + fmt(y) + " n=" + std::to_string(n));
          }
        }
      }
    }
  });
}

void suite_topology(const SuiteConfig& cfg, const QuasiMetric& qm, SplitMix64 rng, Recorder& rec) {
  Check inner("basic neighborhood contains a ball");
  Check outer("ball contains a basic neighborhood");
  const std::vector<Rational> xs = sample_points(qm.cover(), rng, cfg.samples);
  rec.guarded(inner, [&] {
    for (const auto& x : xs) {
      const std::vector<Span> balls = qm.level_spans(cfg.max_level, x);
      std::size_t n = 0;
      for (std::uint64_t k = 0; k <= 12; ++k) {
        ++inner.checked;
        const RSet nb = qm.cover().local_base_nbhd(x, dyadic(k)).set;
        // Balls shrink with n, so the search resumes where the last radius stopped.
        while (n < balls.size() && !RSet::from_spans({balls[n]}).subset_of(nb)) ++n;
        if (n == balls.size()) inner.fail("x=" + fmt(x) + " radius=" + format_dyadic(k));
      }
    }
  });
  rec.guarded(outer, [&] {
    for (const auto& x : xs) {
      const std::vector<Span> balls = qm.level_spans(cfg.levels, x);
      for (std::uint64_t n = 0; n <= cfg.levels; ++n) {
        ++outer.checked;
        if (!qm.cover().open_level(RSet::from_spans({balls[n]}), x, cfg.max_level)) {
          outer.fail("x=" + fmt(x) + " n=" + std::to_string(n));
        }
      }
    }
  });
}

void suite_decomposition(const SuiteConfig& cfg, const Cover& c, bool corrupt, SplitMix64 rng, Recorder& rec) {
  const Decomposition honest = synthesize_decomposition(c);
  const Decomposition d = corrupt ? corrupted(c, honest) : honest;
  Check sound("families sound");
  Check cover_check("points covered");
  rec.guarded(sound, [&] {
    sound.checked = cfg.levels + 1;
    const DecompositionReport r = validate_decomposition(c, d, cfg.levels);
    if (!r.ok) sound.fail(r.describe());
  });
  rec.guarded(cover_check, [&] {
    for (bool right : {true, false}) {
      for (const auto& x : sample_members(c.region(right ? Label::kRight : Label::kLeft), rng, cfg.samples)) {
        ++cover_check.checked;
        const auto idx = right ? honest.f_index(x, cfg.max_level) : honest.h_index(x, cfg.max_level);
        if (!idx) cover_check.fail("x=" + fmt(x) + " has no index");
      }
    }
  });
}

void suite_normality(const SuiteConfig& cfg, const Cover& c, SplitMix64 rng, Recorder& rec) {
  Check disjoint("separators disjoint");
  rec.guarded(disjoint, [&] {
    const auto [c0, c1] = fuzz_closed_pair(c, rng);
    const std::size_t per_side = std::max<std::size_t>(1, cfg.samples / 10);
    const NormalityReport r =
        check_normality(c, c0, c1, sample_with_boundary(c0, rng, per_side), sample_with_boundary(c1, rng, per_side));
    disjoint.checked = r.pairs_checked;
    if (r.overlap) disjoint.fail("C0 and C1 meet at " + fmt(*r.overlap));
    for (const auto& e : r.errors) disjoint.fail(e);
    for (const auto& [a, b] : r.intersecting) disjoint.fail("c0=" + fmt(a) + " c1=" + fmt(b));
  });
}

void suite_urysohn(const SuiteConfig& cfg, const Cover& c, SplitMix64 rng, Recorder& rec) {
  Check range("range and separation");
  Check cont("continuity");
  const auto [e, other] = fuzz_closed_pair(c, rng);
  const std::size_t count = std::max<std::size_t>(1, cfg.samples / 20);
  const std::vector<Rational> xs = sample_with_boundary(other, rng, count);
  std::vector<UrysohnSpec> specs;
  rec.guarded(range, [&] {
    for (const auto& x : xs) {
      const UrysohnSpec u = make_urysohn(c, x, e);
      specs.push_back(u);
      ++range.checked;
      if (urysohn_eval(u, x) != 0) range.fail("f(x) != 0 at x=" + fmt(x));
      for (const auto& t : sample_with_boundary(e, rng, 8)) {
        ++range.checked;
        if (urysohn_eval(u, t) != 1) range.fail("f(t) != 1 on E at t=" + fmt(t) + " x=" + fmt(x));
      }
      for (const auto& t : sample_points(c, rng, 16)) {
        ++range.checked;
        const Rational v = urysohn_eval(u, t);
        if (v < 0 || v > 1) range.fail("f(" + fmt(t) + ")=" + fmt(v) + " x=" + fmt(x));
      }
    }
  });
  rec.guarded(cont, [&] {
    const std::uint64_t tol = std::min<std::uint64_t>(20, cfg.levels);
    for (const auto& u : specs) {
      std::vector<Rational> probes = sample_points(c, rng, 6);
      for (const Rational& d : std::vector<Rational>{0, u.epsilon / 2, u.epsilon, -u.epsilon / 2, -u.epsilon}) {
        probes.push_back(u.x + d);
      }
      cont.checked += probes.size();
      for (const auto& f : check_continuity(c, u, probes, tol, rng, 20)) {
        cont.fail("x=" + fmt(u.x) + " t=" + fmt(f.t) + " tolerance=" + format_dyadic(f.tolerance_exponent));
      }
    }
  });
}

void suite_extractor(const SuiteConfig& cfg, const QuasiMetric& qm, SplitMix64 rng, Recorder& rec) {
  Check found("extractor covers point");
  Check leaks("extractor closure in A2+A3");
  const std::size_t count = std::max<std::size_t>(1, cfg.samples / 20);
  const std::vector<Rational> xs = sample_members(qm.cover().region(Label::kRight), rng, count);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> hits;
  rec.guarded(found, [&] {
    for (const auto& x : xs) {
      ++found.checked;
      try {
        const auto kn = extractor_cover(qm, x, cfg.max_level);
        hits.push_back(kn);
      } catch (const BoundExhausted&) {
        found.exhausted = true;
      }
    }
  });
  rec.guarded(leaks, [&] {
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    for (const auto& [k, n] : hits) {
      const std::vector<Rational> candidates = sample_points(qm.cover(), rng, 20);
      leaks.checked += candidates.size();
      for (const auto& p : extractor_closure_leaks(qm, k, n, candidates)) {
        leaks.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " p=" + fmt(p));
      }
    }
  });
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& cfg, const std::vector<NamedCover>& covers) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
    throw PreconditionError("unknown suite '" + cfg.suite + "'");
  }
  SuiteResult out;
  if (cfg.samples == 0) return out;
  auto selected = [&](const char* s) { return cfg.suite == "all" || cfg.suite == s; };
  SplitMix64 root(cfg.seed);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const Cover& c = covers[i].cover;
    SplitMix64 base = root.fork(i);
    const std::uint64_t axiom_seed = base.fork(0).next();
    std::optional<QuasiMetric> qm;
    auto metric = [&]() -> const QuasiMetric& {
      if (!qm) qm.emplace(build_metric(c, cfg.corrupt));
      return *qm;
    };
    auto recorder = [&](const char* s) { return Recorder(out, s, covers[i].id); };
    if (selected("axioms")) {
      Recorder r = recorder("axioms");
      suite_axioms(cfg, metric(), axiom_seed, r);
    }
    if (selected("balls")) {
      Recorder r = recorder("balls");
      suite_balls(cfg, metric(), base.fork(1), r);
    }
    if (selected("topology")) {
      Recorder r = recorder("topology");
      suite_topology(cfg, metric(), base.fork(2), r);
    }
    if (selected("decomposition")) {
      Recorder r = recorder("decomposition");
      suite_decomposition(cfg, c, cfg.corrupt, base.fork(3), r);
    }
    if (selected("normality")) {
      Recorder r = recorder("normality");
      suite_normality(cfg, c, base.fork(4), r);
    }
    if (selected("urysohn")) {
      Recorder r = recorder("urysohn");
      suite_urysohn(cfg, c, base.fork(5), r);
    }
    if (selected("extractor")) {
      Recorder r = recorder("extractor");
      suite_extractor(cfg, metric(), base.fork(6), r);
    }
  }
  return out;
}

std::uint64_t env_max_level() {
  const char* v = std::getenv("HYBRIDLINE_MAX_LEVEL");
  if (!v || !*v) return 64;
  try {
    std::size_t used = 0;
    const unsigned long long n = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ParseError(std::string("HYBRIDLINE_MAX_LEVEL must be a natural number, got '") + v + "'");
  }
}

}  // namespace hybridline
