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

#include <cctype>
#include <string>

#include "hybridline/errors.hpp"
#include "internal.hpp"

namespace hybridline {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }

  // A rational or +-inf token, up to the next delimiter.
  std::string token() {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::string_view(",;)]}").find(text_[pos_]) == std::string_view::npos &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (begin == pos_) fail("expected a number");
    return std::string(text_.substr(begin, pos_ - begin));
  }

  Rational rational() {
    const std::size_t at = pos_;
    try {
      return parse_rational(token());
    } catch (const ParseError& e) {
      throw ParseError("at offset " + std::to_string(at) + ": " + e.what());
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("rset text at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Endpoint read_endpoint(Reader& in, bool closed) {
  std::string tok = in.token();
  if (tok == "-inf") return Endpoint::neg_inf();
  if (tok == "inf" || tok == "+inf") return Endpoint::pos_inf();
  Rational v;
  try {
    v = parse_rational(tok);
  } catch (const ParseError& e) {
    in.fail(e.what());
  }
  return closed ? Endpoint::closed_at(v) : Endpoint::open(v);
}

void read_term(Reader& in, std::vector<Span>& spans, CountableSet& k) {
  const char c = in.peek();
  if (c == '(' || c == '[') {
    in.accept(std::string_view(&c, 1));
    Endpoint lo = read_endpoint(in, c == '[');
    in.expect(",");
    Endpoint hi = read_endpoint(in, false);
    if (in.accept("]")) {
      if (!hi.finite()) in.fail("infinite endpoint cannot be closed");
      hi.closed = true;
    } else {
      in.expect(")");
    }
    if (!lo.finite() && lo.closed) in.fail("infinite endpoint cannot be closed");
    try {
      spans.push_back(Span::from_interval(Interval::make(lo, hi)));
    } catch (const PreconditionError& e) {
      in.fail(e.what());
    }
  } else if (c == '{') {
    in.expect("{");
    if (in.accept("}")) return;
    do {
      k.points.push_back(in.rational());
    } while (in.accept(","));
    in.expect("}");
  } else if (in.accept("gen(")) {
    SeqGen g;
    g.limit = in.rational();
    in.expect(";");
    g.coeff = in.rational();
    in.expect(";");
    g.ratio = in.rational();
    in.expect(";");
    const Rational start = in.rational();
    if (start.get_den() != 1 || start < 0 || !start.get_num().fits_ulong_p()) in.fail("bad start index");
    g.start = start.get_num().get_ui();
    in.expect(")");
    try {
      g.validate();
    } catch (const PreconditionError& e) {
      in.fail(e.what());
    }
    k.gens.push_back(std::move(g));
  } else {
    in.fail("expected an interval, a point set, or gen(...)");
  }
}

RSet read_union(Reader& in) {
  std::vector<Span> spans;
  CountableSet k;
  read_term(in, spans, k);
  while (in.accept("U")) read_term(in, spans, k);
  return RSet::build(std::move(spans), std::move(k), {});
}

std::string format_gen(const SeqGen& g) {
  return "gen(" + format_rational(g.limit) + ";" + format_rational(g.coeff) + ";" + format_rational(g.ratio) +
         ";" + std::to_string(g.start) + ")";
}

std::string format_countable(const CountableSet& k) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += " U ";
  };
  if (!k.points.empty()) {
    out += "{";
    for (std::size_t i = 0; i < k.points.size(); ++i) {
      if (i) out += ",";
      out += format_rational(k.points[i]);
    }
    out += "}";
  }
  for (const auto& g : k.gens) {
    sep();
    out += format_gen(g);
  }
  return out;
}

}  // namespace

RSet RSet::parse(std::string_view text) {
  Reader in(text);
  RSet left = read_union(in);
  if (in.accept("minus")) {
    RSet right = read_union(in);
    left = left - right;
  }
  if (!in.at_end()) in.fail("trailing input");
  return left;
}

std::string RSet::to_string() const {
  std::string out;
  for (const auto& s : spans_) {
    if (!out.empty()) out += " U ";
    const Interval iv = s.to_interval();
    out += iv.lo.closed ? "[" : "(";
    out += iv.lo.finite() ? format_rational(iv.lo.value) : "-inf";
    out += ",";
    out += iv.hi.finite() ? format_rational(iv.hi.value) : "inf";
    out += iv.hi.closed ? "]" : ")";
  }
  const std::string plus = format_countable(plus_);
  if (!plus.empty()) {
    if (!out.empty()) out += " U ";
    out += plus;
  }
  if (out.empty()) return "{}";
  const std::string minus = format_countable(minus_);
  if (!minus.empty()) out += " minus " + minus;
  return out;
}

}  // namespace hybridline
