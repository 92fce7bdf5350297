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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hybridline/cover_io.hpp"
#include "hybridline/decompose.hpp"
#include "hybridline/errors.hpp"
#include "hybridline/qmetric.hpp"
#include "hybridline/separation.hpp"
#include "hybridline/suite.hpp"

using namespace hybridline;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitExhausted = 3;

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

Label parse_label(int v) {
  if (v < 1 || v > 4) throw ParseError("label must be 1, 2, 3 or 4");
  return label_from_int(v);
}

std::string describe_distance(const DistanceResult& r) {
  return r.family ? r.distance.to_string() + " " + r.family->to_string() : r.distance.to_string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on hybrid topologies of the real line"};
  app.require_subcommand(1);

  std::string cover_arg;
  std::string set_arg;
  std::string x_arg;
  std::string y_arg;
  std::uint64_t levels = 24;
  std::uint64_t n_arg = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 20;
  std::optional<std::uint64_t> max_level_flag;
  int label_arg = 1;

  auto add_cover = [&](CLI::App* sub) { sub->add_option("cover", cover_arg, "cover file or preset name")->required(); };

  CLI::App* validate = app.add_subcommand("validate", "validate a cover file and print its canonical form");
  add_cover(validate);

  CLI::App* member = app.add_subcommand("member", "test membership of a point in a set");
  member->add_option("set", set_arg, "set in canonical text")->required();
  member->add_option("x", x_arg, "rational point")->required();

  CLI::App* region = app.add_subcommand("region", "print the part of the cover carrying a label");
  add_cover(region);
  region->add_option("label", label_arg, "label 1-4")->required();

  std::string radius_arg;
  CLI::App* nbhd = app.add_subcommand("nbhd", "print the basic neighborhood of a point");
  add_cover(nbhd);
  nbhd->add_option("x", x_arg)->required();
  nbhd->add_option("radius", radius_arg)->required();

  CLI::App* closure_cmd = app.add_subcommand("closure", "closure of a set in the hybrid topology");
  add_cover(closure_cmd);
  closure_cmd->add_option("set", set_arg)->required();

  CLI::App* decompose = app.add_subcommand("decompose", "emit the closed families level by level as JSON lines");
  add_cover(decompose);
  decompose->add_option("--levels", levels);

  CLI::App* base = app.add_subcommand("base", "print the level neighborhoods of a point");
  add_cover(base);
  base->add_option("x", x_arg)->required();
  base->add_option("--levels", levels);

  CLI::App* qdist = app.add_subcommand("qdist", "quasi-distance between two points");
  add_cover(qdist);
  qdist->add_option("x", x_arg)->required();
  qdist->add_option("y", y_arg)->required();
  qdist->add_option("--max-level", max_level_flag);

  CLI::App* ball = app.add_subcommand("ball", "ball of radius 2^-n around a point");
  add_cover(ball);
  ball->add_option("x", x_arg)->required();
  ball->add_option("n", n_arg)->required();

  SuiteConfig suite_cfg;
  std::vector<std::string> check_covers;
  std::uint64_t fuzz_count = 10;
  std::string out_path;
  CLI::App* check = app.add_subcommand("check", "run property suites and write a JSON-lines report");
  check->add_option("covers", check_covers, "cover files or preset names; fuzzed covers when omitted");
  check->add_option("--suite", suite_cfg.suite)->check(CLI::IsMember(suite_names()));
  check->add_option("--seed", suite_cfg.seed);
  check->add_option("--samples", suite_cfg.samples);
  check->add_option("--levels", suite_cfg.levels);
  check->add_option("--fuzz-covers", fuzz_count, "number of fuzzed covers when none are given");
  check->add_flag("--corrupt", suite_cfg.corrupt, "swap in a broken decomposition and tampered balls");
  check->add_option("--out", out_path, "write the report here instead of stdout");

  std::string c0_arg;
  std::string c1_arg;
  CLI::App* separate = app.add_subcommand("separate", "build separating neighborhoods for two closed sets");
  add_cover(separate);
  separate->add_option("--c0", c0_arg)->required();
  separate->add_option("--c1", c1_arg)->required();
  separate->add_option("--samples", samples);
  separate->add_option("--seed", seed);

  std::string eval_arg;
  std::string eps_arg;
  CLI::App* urysohn = app.add_subcommand("urysohn", "evaluate the separating function of a point and a closed set");
  add_cover(urysohn);
  urysohn->add_option("--set", set_arg)->required();
  urysohn->add_option("--x", x_arg)->required();
  urysohn->add_option("--eval", eval_arg)->required();
  urysohn->add_option("--epsilon", eps_arg);

  CLI::App* classify_cmd = app.add_subcommand("classify", "report metrizability facts for a cover");
  add_cover(classify_cmd);

  FuzzSpec fuzz_spec;
  CLI::App* fuzz = app.add_subcommand("fuzz", "print a random cover");
  fuzz->add_option("--seed", fuzz_spec.seed);
  fuzz->add_option("--max-breakpoints", fuzz_spec.max_breakpoints);
  fuzz->add_option("--max-point-overrides", fuzz_spec.max_point_overrides);
  fuzz->add_option("--max-gen-overrides", fuzz_spec.max_gen_overrides);

  std::string from_arg = "-1";
  std::string to_arg = "1";
  std::uint64_t steps = 64;
  CLI::App* plot = app.add_subcommand("plot-data", "CSV of y and rho(x, y) on a uniform grid");
  add_cover(plot);
  plot->add_option("x", x_arg)->required();
  plot->add_option("--from", from_arg);
  plot->add_option("--to", to_arg);
  plot->add_option("--steps", steps);

  CLI11_PARSE(app, argc, argv);

  try {
    const std::uint64_t max_level = max_level_flag ? *max_level_flag : env_max_level();
    std::ostream& out = std::cout;

    if (*validate) {
      const Cover c = load_cover(cover_arg);
      out << serialize_cover(c.spec());
    } else if (*member) {
      out << (RSet::parse(set_arg).contains(parse_rational(x_arg)) ? "true" : "false") << "\n";
    } else if (*region) {
      out << load_cover(cover_arg).region(parse_label(label_arg)).to_string() << "\n";
    } else if (*nbhd) {
      const LocalBaseNbhd b = load_cover(cover_arg).local_base_nbhd(parse_rational(x_arg), parse_rational(radius_arg));
      out << "label " << to_int(b.label) << "\n" << b.set.to_string() << "\n";
    } else if (*closure_cmd) {
      out << load_cover(cover_arg).closure(RSet::parse(set_arg)).to_string() << "\n";
    } else if (*decompose) {
      const Decomposition d = synthesize_decomposition(load_cover(cover_arg));
      for (std::uint64_t n = 0; n <= levels; ++n) {
        json rec;
        rec["n"] = n;
        rec["F"] = d.F(n).to_string();
        rec["H"] = d.H(n).to_string();
        out << rec.dump() << "\n";
      }
    } else if (*base) {
      const Cover c = load_cover(cover_arg);
      const Decomposition d = synthesize_decomposition(c);
      const Rational x = parse_rational(x_arg);
      for (std::uint64_t i = 0; i <= levels; ++i) {
        out << i << "\t" << family_at(i).to_string() << "\t" << min_nbhd_level(c, d, i, x).to_string() << "\n";
      }
    } else if (*qdist) {
      const QuasiMetric qm = make_quasi_metric(load_cover(cover_arg));
      const Rational x = parse_rational(x_arg);
      const Rational y = parse_rational(y_arg);
      if (x != y && qm.witness_level(x, y) > max_level) {
        throw SearchExhausted("no level up to " + std::to_string(max_level) + " separates the points");
      }
      out << describe_distance(qm.qdist(x, y)) << "\n";
    } else if (*ball) {
      const QuasiMetric qm = make_quasi_metric(load_cover(cover_arg));
      out << qm.ball(parse_rational(x_arg), n_arg).to_string() << "\n";
    } else if (*check) {
      std::vector<NamedCover> covers;
      if (check_covers.empty()) {
        for (std::uint64_t i = 0; i < fuzz_count; ++i) {
          const std::uint64_t s = suite_cfg.seed + i;
          covers.push_back({"fuzz:" + std::to_string(s), validate_cover(fuzz_cover({4, 3, 2, s}))});
        }
      } else {
        for (const auto& p : check_covers) covers.push_back({p, load_cover(p)});
      }
      suite_cfg.max_level = max_level;
      const SuiteResult r = run_suite(suite_cfg, covers);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw ParseError("cannot write " + out_path);
      }
      std::ostream& dest = out_path.empty() ? out : file;
      for (const auto& line : r.records) dest << line << "\n";
      if (r.violations) std::cerr << r.violations << " violation(s)\n";
      return r.exit_code();
    } else if (*separate) {
      const Cover c = load_cover(cover_arg);
      const RSet c0 = RSet::parse(c0_arg);
      const RSet c1 = RSet::parse(c1_arg);
      SplitMix64 rng(seed);
      const std::vector<Rational> s0 = sample_with_boundary(c0, rng, samples);
      const std::vector<Rational> s1 = sample_with_boundary(c1, rng, samples);
      const NormalityReport r = check_normality(c, c0, c1, s0, s1);
      if (r.overlap) {
        std::cerr << "the sets meet at " << format_rational(*r.overlap) << "\n";
        return kExitInput;
      }
      for (int side = 0; side < 2; ++side) {
        for (const auto& p : side == 0 ? s0 : s1) {
          try {
            const SepNbhd u = sep_nbhd(c, p, side == 0 ? c1 : c0);
            out << "U" << side << "\t" << format_rational(p) << "\t" << u.n_of_c.get_str() << "\t"
                << u.set.to_string() << "\n";
          } catch (const NoFiniteN&) {
            out << "U" << side << "\t" << format_rational(p) << "\tnone\t-\n";
          }
        }
      }
      for (const auto& [a, b] : r.intersecting) {
        out << "intersecting\t" << format_rational(a) << "\t" << format_rational(b) << "\n";
      }
      for (const auto& e : r.errors) out << "error\t" << e << "\n";
      out << (r.ok() ? "disjoint" : "not disjoint") << "\t" << r.pairs_checked << " pairs\n";
      return r.ok() ? 0 : kExitViolation;
    } else if (*urysohn) {
      const Cover c = load_cover(cover_arg);
      std::optional<Rational> eps;
      if (!eps_arg.empty()) eps = parse_rational(eps_arg);
      const UrysohnSpec u = make_urysohn(c, parse_rational(x_arg), RSet::parse(set_arg), eps);
      out << "epsilon\t" << format_rational(u.epsilon) << "\n";
      for (const auto& t : parse_list(eval_arg)) {
        out << format_rational(t) << "\t" << format_rational(urysohn_eval(u, t)) << "\n";
      }
    } else if (*classify_cmd) {
      const Verdict v = classify(load_cover(cover_arg));
      json rec;
      rec["quasi_metrizable"] = v.quasi_metrizable;
      rec["metrizable_sufficient"] = v.metrizable_sufficient;
      rec["second_countable"] = v.second_countable ? json(*v.second_countable) : json(nullptr);
      out << rec.dump() << "\n";
    } else if (*fuzz) {
      out << serialize_cover(fuzz_cover(fuzz_spec));
    } else if (*plot) {
      const QuasiMetric qm = make_quasi_metric(load_cover(cover_arg));
      const Rational x = parse_rational(x_arg);
      const Rational lo = parse_rational(from_arg);
      const Rational hi = parse_rational(to_arg);
      if (steps == 0 || !(lo < hi)) throw ParseError("need --from < --to and --steps > 0");
      out << "y,rho\n";
      for (std::uint64_t i = 0; i <= steps; ++i) {
        Rational y = lo + (hi - lo) * Rational(static_cast<unsigned long>(i)) / Rational(static_cast<unsigned long>(steps));
        y.canonicalize();
        out << format_rational(y) << "," << format_rational(qm.qdist(x, y).distance.value()) << "\n";
      }
    }
  } catch (const OverlapError& e) {
    std::cerr << "overlap: " << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return kExitInput;
  } catch (const SearchExhausted& e) {
    std::cerr << "exhausted: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const BoundExhausted& e) {
    std::cerr << "exhausted: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const NoFiniteN& e) {
    std::cerr << "no finite n: " << e.what() << "\n";
    return kExitViolation;
  } catch (const SpecInvalid& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
