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

#include "hybridline/cover_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hybridline/errors.hpp"
#include "hybridline/random.hpp"

namespace hybridline {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field " + field + ": " + what);
}

Rational read_rational(const Json& j, const std::string& field) {
  if (!j.is_string() && !j.is_number_integer()) field_error(field, "expected a rational string");
  try {
    return parse_rational(j.is_string() ? j.get<std::string>() : std::to_string(j.get<long long>()));
  } catch (const ParseError& e) {
    field_error(field, e.what());
  }
}

Label read_label(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected a label 1..4");
  const auto v = j.get<long long>();
  if (v < 1 || v > 4) field_error(field, "label out of range");
  return static_cast<Label>(v);
}

const Json& member(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) field_error(key, "missing");
  if (!it->is_array()) field_error(key, "expected an array");
  return *it;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

FourCover parse_cover_spec(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(json_text, e.byte)) + ": malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("line 1: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "breakpoints" && key != "piece_labels" && key != "point_overrides" && key != "gen_overrides") {
      field_error(key, "unknown field");
    }
  }

  FourCover spec;
  const Json& bps = member(doc, "breakpoints");
  for (std::size_t i = 0; i < bps.size(); ++i) {
    spec.breakpoints.push_back(read_rational(bps[i], "breakpoints[" + std::to_string(i) + "]"));
  }
  for (std::size_t i = 1; i < spec.breakpoints.size(); ++i) {
    if (!(spec.breakpoints[i - 1] < spec.breakpoints[i])) field_error("breakpoints", "must be strictly increasing");
  }
  const Json& labels = member(doc, "piece_labels");
  if (labels.size() != 2 * spec.breakpoints.size() + 1) {
    field_error("piece_labels", "expected " + std::to_string(2 * spec.breakpoints.size() + 1) + " labels, got " +
                                    std::to_string(labels.size()));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    spec.piece_labels.push_back(read_label(labels[i], "piece_labels[" + std::to_string(i) + "]"));
  }
  if (doc.contains("point_overrides")) {
    const Json& po = member(doc, "point_overrides");
    for (std::size_t i = 0; i < po.size(); ++i) {
      const std::string f = "point_overrides[" + std::to_string(i) + "]";
      if (!po[i].is_array() || po[i].size() != 2) field_error(f, "expected [\"p/q\", label]");
      spec.point_overrides.emplace_back(read_rational(po[i][0], f), read_label(po[i][1], f));
    }
  }
  if (doc.contains("gen_overrides")) {
    const Json& go = member(doc, "gen_overrides");
    for (std::size_t i = 0; i < go.size(); ++i) {
      const std::string f = "gen_overrides[" + std::to_string(i) + "]";
      if (!go[i].is_array() || go[i].size() != 2 || !go[i][0].is_object()) {
        field_error(f, "expected [{\"a\",\"c\",\"r\",\"k0\"}, label]");
      }
      const Json& g = go[i][0];
      for (const char* k : {"a", "c", "r", "k0"}) {
        if (!g.contains(k)) field_error(f, std::string("missing ") + k);
      }
      if (!g["k0"].is_number_unsigned()) field_error(f + ".k0", "expected a natural number");
      SeqGen gen{read_rational(g["a"], f + ".a"), read_rational(g["c"], f + ".c"), read_rational(g["r"], f + ".r"),
                 g["k0"].get<std::uint64_t>()};
      try {
        gen.validate();
      } catch (const PreconditionError& e) {
        field_error(f, e.what());
      }
      spec.gen_overrides.emplace_back(std::move(gen), read_label(go[i][1], f));
    }
  }
  return spec;
}

Cover parse_cover(std::string_view json_text) { return validate_cover(parse_cover_spec(json_text)); }

Cover load_cover(const std::string& path_or_preset) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), path_or_preset) != names.end() &&
      !std::filesystem::exists(path_or_preset)) {
    return validate_cover(preset(path_or_preset));
  }
  std::ifstream in(path_or_preset);
  if (!in) throw ParseError("cannot open cover file '" + path_or_preset + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cover(buf.str());
}

std::string serialize_cover(const FourCover& spec) {
  Json doc = Json::object();
  doc["breakpoints"] = Json::array();
  for (const auto& b : spec.breakpoints) doc["breakpoints"].push_back(format_rational(b));
  doc["piece_labels"] = Json::array();
  for (Label l : spec.piece_labels) doc["piece_labels"].push_back(to_int(l));
  doc["point_overrides"] = Json::array();
  for (const auto& [p, l] : spec.point_overrides) {
    doc["point_overrides"].push_back(Json::array({format_rational(p), to_int(l)}));
  }
  doc["gen_overrides"] = Json::array();
  for (const auto& [g, l] : spec.gen_overrides) {
    Json gj = Json::object();
    gj["a"] = format_rational(g.limit);
    gj["c"] = format_rational(g.coeff);
    gj["r"] = format_rational(g.ratio);
    gj["k0"] = g.start;
    doc["gen_overrides"].push_back(Json::array({gj, to_int(l)}));
  }
  return doc.dump() + "\n";
}

namespace {

Rational fraction(std::int64_t p, std::int64_t q) {
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

Rational point_inside_piece(const std::vector<Rational>& bps, std::size_t j, SplitMix64& rng) {
  Rational lo;
  Rational hi;
  if (bps.empty()) {
    lo = -4;
    hi = 4;
  } else if (j == 0) {
    hi = bps.front();
    lo = hi - 4;
  } else if (j == bps.size()) {
    lo = bps.back();
    hi = lo + 4;
  } else {
    lo = bps[j - 1];
    hi = bps[j];
  }
  return lo + (hi - lo) * fraction(rng.between(1, 15), 16);
}

}  // namespace

FourCover fuzz_cover(const FuzzSpec& fs) {
  SplitMix64 rng(fs.seed);
  FourCover spec;

  const std::uint64_t m = rng.below(fs.max_breakpoints + 1);
  for (std::uint64_t attempt = 0; spec.breakpoints.size() < m && attempt < 64; ++attempt) {
    Rational b = fraction(rng.between(-12, 12), static_cast<std::int64_t>(1) << rng.below(3));
    if (std::find(spec.breakpoints.begin(), spec.breakpoints.end(), b) == spec.breakpoints.end()) {
      spec.breakpoints.push_back(std::move(b));
    }
  }
  std::sort(spec.breakpoints.begin(), spec.breakpoints.end());
  for (std::size_t i = 0; i < 2 * spec.breakpoints.size() + 1; ++i) {
    spec.piece_labels.push_back(static_cast<Label>(1 + rng.below(4)));
  }

  const std::uint64_t po = rng.below(fs.max_point_overrides + 1);
  std::vector<Rational> taken;
  for (std::uint64_t i = 0; i < po; ++i) {
    const std::size_t j = rng.below(spec.breakpoints.size() + 1);
    Rational p = point_inside_piece(spec.breakpoints, j, rng);
    const auto l = static_cast<Label>(1 + rng.below(4));
    if (std::find(taken.begin(), taken.end(), p) != taken.end()) continue;
    taken.push_back(p);
    spec.point_overrides.emplace_back(std::move(p), l);
  }

  const RSet bps = RSet::points(spec.breakpoints);
  RSet occupied = bps | RSet::points(taken);
  const std::uint64_t go = rng.below(fs.max_gen_overrides + 1);
  const Rational ratios[] = {fraction(1, 2), fraction(1, 3), fraction(2, 3)};
  for (std::uint64_t i = 0; i < go; ++i) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      SeqGen g;
      g.ratio = ratios[rng.below(3)];
      if (!spec.breakpoints.empty() && rng.chance(1, 2)) {
        g.limit = spec.breakpoints[rng.below(spec.breakpoints.size())];
      } else {
        g.limit = point_inside_piece(spec.breakpoints, rng.below(spec.breakpoints.size() + 1), rng);
      }
      g.coeff = fraction(rng.chance(1, 2) ? 1 : -1, rng.between(1, 4));
      g.start = rng.below(3);
      const auto l = static_cast<Label>(1 + rng.below(4));
      const RSet gs = RSet::generator(g);
      if (!(gs & occupied).empty()) continue;
      occupied = occupied | gs;
      spec.gen_overrides.emplace_back(std::move(g), l);
      break;
    }
  }
  return spec;
}

}  // namespace hybridline
