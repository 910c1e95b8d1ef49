// Copyright 2026 The spinqft Authors
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

#include "spinqft/pulse_dsl.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

#include "spinqft/error.hpp"

namespace spinqft::nmr {

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

// Splits into tokens, dropping '#' comments. A "delay:{" token runs to its
// closing brace so the term list may contain spaces.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    const std::size_t start = i;
    const int tl = line;
    const int tc = column;
    int depth = 0;
    while (i < text.size()) {
      const char d = text[i];
      if (d == '{') ++depth;
      if (d == '}') --depth;
      if (d == '#' && depth <= 0) break;
      if (std::isspace(static_cast<unsigned char>(d)) && depth <= 0) break;
      advance();
    }
    if (depth > 0) throw ParseError("unterminated '{'", tl, tc);
    out.push_back({text.substr(start, i - start), tl, tc});
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(const Token& t) : tok_(t) {}

  bool done() const { return pos_ >= tok_.text.size(); }
  char peek() const { return done() ? '\0' : tok_.text[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view s) {
    if (tok_.text.substr(pos_).starts_with(s)) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  void expect(char c, std::string_view what) {
    if (!accept(c)) fail("expected " + std::string(what));
  }
  void skip_spaces() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  double number(std::string_view what) {
    const char* first = tok_.text.data() + pos_;
    const char* last = tok_.text.data() + tok_.text.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || !std::isfinite(v)) fail("expected " + std::string(what));
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  int integer(std::string_view what) {
    const char* first = tok_.text.data() + pos_;
    const char* last = tok_.text.data() + tok_.text.size();
    int v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) fail("expected " + std::string(what));
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  // A single digit, for compact pair labels such as J12.
  int digit() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected spin label digit");
    return tok_.text[pos_++] - '0';
  }

  void end() {
    if (!done()) fail("unexpected '" + std::string(tok_.text.substr(pos_)) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " in '" + std::string(tok_.text) + "'", tok_.line,
                     tok_.column + static_cast<int>(pos_));
  }

 private:
  const Token& tok_;
  std::size_t pos_ = 0;
};

double parse_phase(Cursor& c, bool& is_z) {
  const bool negative = c.accept('-');
  is_z = false;
  double phase = 0.0;
  if (c.accept('x')) {
    phase = kPhaseX;
  } else if (c.accept('y')) {
    phase = kPhaseY;
  } else if (c.accept('z')) {
    is_z = true;
  } else if (c.accept('p')) {
    if (negative) c.fail("'-p' is not a phase");
    return degrees(c.number("phase in degrees"));
  } else {
    c.fail("expected axis x, y, z or p<degrees>");
  }
  if (negative && !is_z) phase += std::numbers::pi;
  if (negative && is_z) phase = -1.0;  // flag for the caller
  return phase;
}

std::vector<int> parse_spins(Cursor& c) {
  std::vector<int> spins;
  do {
    c.accept('s');
    const int s = c.integer("spin label");
    if (s < 1) c.fail("spin labels start at 1");
    spins.push_back(s);
  } while (c.accept(','));
  return spins;
}

// "12" or "(1,12)" after a J.
std::pair<int, int> parse_pair(Cursor& c) {
  if (c.accept('(')) {
    const int j = c.integer("spin label");
    c.expect(',', "','");
    const int k = c.integer("spin label");
    c.expect(')', "')'");
    return {j, k};
  }
  const int j = c.digit();
  const int k = c.digit();
  return {j, k};
}

DelayTerm parse_term(Cursor& c) {
  c.skip_spaces();
  DelayTerm t;
  if (c.accept("1/(")) {
    t.symbolic = true;
    t.value = c.number("divisor");
    if (!(t.value > 0.0)) c.fail("divisor must be positive");
    c.accept('*');
    c.expect('J', "'J'");
    std::tie(t.j, t.k) = parse_pair(c);
    c.expect(')', "')'");
  } else {
    t.value = c.number("delay in seconds or 1/(m*Jjk)");
    if (!(t.value >= 0.0)) c.fail("delay must be non-negative");
    c.expect('@', "'@J'");
    c.expect('J', "'J'");
    std::tie(t.j, t.k) = parse_pair(c);
  }
  if (t.j == t.k) c.fail("coupling of a spin with itself");
  if (t.j < 1 || t.k < 1) c.fail("spin labels start at 1");
  c.skip_spaces();
  return t;
}

CouplingDelay parse_delay(Cursor& c) {
  CouplingDelay d;
  if (c.accept('{')) {
    do {
      d.terms.push_back(parse_term(c));
    } while (c.accept(','));
    c.expect('}', "'}'");
  } else {
    d.terms.push_back(parse_term(c));
  }
  c.end();
  return d;
}

PulseElement parse_element(const Token& tok) {
  Cursor c(tok);
  if (c.accept("delay:")) return parse_delay(c);

  if (c.accept('z')) {
    CompositeZ z;
    z.angle = degrees(c.number("angle in degrees"));
    c.expect('@', "'@'");
    z.spins = parse_spins(c);
    c.end();
    return z;
  }

  const double angle = degrees(c.number("angle in degrees"));
  bool is_z = false;
  const double phase = parse_phase(c, is_z);
  c.expect('@', "'@'");
  if (is_z) {
    CompositeZ z;
    z.angle = phase < 0.0 ? -angle : angle;
    if (c.peek() == 't') c.fail("z-rotations address spins");
    z.spins = parse_spins(c);
    c.end();
    return z;
  }
  if (c.accept('t')) {
    TransitionPulse t;
    t.angle = angle;
    t.phase = phase;
    t.from = c.integer("transition label");
    c.expect('-', "'-'");
    t.to = c.integer("transition label");
    if (t.from < 1 || t.to < 1) c.fail("transition labels start at 1");
    c.end();
    return t;
  }
  SpinPulse p;
  p.angle = angle;
  p.phase = phase;
  p.spins = parse_spins(c);
  c.end();
  return p;
}

int largest_spin(const PulseElement& e) {
  int m = 0;
  if (const auto* p = std::get_if<SpinPulse>(&e)) {
    for (int s : p->spins) m = std::max(m, s);
  } else if (const auto* z = std::get_if<CompositeZ>(&e)) {
    for (int s : z->spins) m = std::max(m, s);
  } else if (const auto* d = std::get_if<CouplingDelay>(&e)) {
    for (const auto& t : d->terms) m = std::max({m, t.j, t.k});
  } else if (const auto* t = std::get_if<TransitionPulse>(&e)) {
    int label = std::max(t->from, t->to) - 1;
    int bits = 0;
    while (label > 0) {
      ++bits;
      label >>= 1;
    }
    m = std::max(m, bits);
  }
  return m;
}

std::string format(double v) {
  // Round to 1e-9 so that degree values recovered from radians print short.
  const double rounded = std::round(v * 1e9) / 1e9;
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), rounded == 0.0 ? 0.0 : rounded);
  return std::string(buf.data(), ptr);
}

std::string phase_text(double phase) {
  const double two_pi = 2.0 * std::numbers::pi;
  double p = std::fmod(phase, two_pi);
  if (p < 0.0) p += two_pi;
  constexpr double eps = 1e-12;
  if (std::abs(p - kPhaseX) < eps || std::abs(p - two_pi) < eps) return "x";
  if (std::abs(p - kPhaseY) < eps) return "y";
  if (std::abs(p - kPhaseMinusX) < eps) return "-x";
  if (std::abs(p - kPhaseMinusY) < eps) return "-y";
  return "p" + format(p * 180.0 / std::numbers::pi);
}

std::string spin_list(const std::vector<int>& spins) {
  std::string out;
  for (std::size_t i = 0; i < spins.size(); ++i) {
    if (i) out += ',';
    out += 's' + std::to_string(spins[i]);
  }
  return out;
}

std::string pair_text(int j, int k) {
  if (j <= 9 && k <= 9) return std::to_string(j) + std::to_string(k);
  return "(" + std::to_string(j) + "," + std::to_string(k) + ")";
}

std::string term_text(const DelayTerm& t) {
  if (t.symbolic) return "1/(" + format(t.value) + "*J" + pair_text(t.j, t.k) + ")";
  return format(t.value) + "@J" + pair_text(t.j, t.k);
}

std::string element_text(const PulseElement& e) {
  const double to_deg = 180.0 / std::numbers::pi;
  if (const auto* p = std::get_if<SpinPulse>(&e)) {
    return format(p->angle * to_deg) + phase_text(p->phase) + "@" + spin_list(p->spins);
  }
  if (const auto* t = std::get_if<TransitionPulse>(&e)) {
    return format(t->angle * to_deg) + phase_text(t->phase) + "@t" + std::to_string(t->from) + "-" +
           std::to_string(t->to);
  }
  if (const auto* z = std::get_if<CompositeZ>(&e)) {
    return "z" + format(z->angle * to_deg) + "@" + spin_list(z->spins);
  }
  const auto& d = std::get<CouplingDelay>(e);
  if (d.terms.size() == 1) return "delay:" + term_text(d.terms.front());
  std::string out = "delay:{";
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    if (i) out += ',';
    out += term_text(d.terms[i]);
  }
  return out + "}";
}

}  // namespace

PulseSequence parse_sequence(std::string_view text, std::string default_name) {
  std::string name = std::move(default_name);
  std::optional<int> spins;
  std::vector<PulseElement> elements;
  int largest = 0;
  std::vector<Token> element_tokens;

  for (const Token& tok : tokenize(text)) {
    if (tok.text.starts_with("name=")) {
      if (!elements.empty()) throw ParseError("name= must precede the elements", tok.line, tok.column);
      name = std::string(tok.text.substr(5));
      if (name.empty()) throw ParseError("empty name", tok.line, tok.column);
      continue;
    }
    if (tok.text.starts_with("spins=")) {
      if (!elements.empty()) throw ParseError("spins= must precede the elements", tok.line, tok.column);
      Cursor c(tok);
      c.accept("spins=");
      const int n = c.integer("spin count");
      c.end();
      if (n < 1 || n > kMaxQubits) throw ParseError("spin count outside [1, 12]", tok.line, tok.column);
      spins = n;
      continue;
    }
    PulseElement e = parse_element(tok);
    const int m = largest_spin(e);
    if (spins && m > *spins) {
      throw ParseError("label beyond spins=" + std::to_string(*spins) + " in '" + std::string(tok.text) + "'",
                       tok.line, tok.column);
    }
    largest = std::max(largest, m);
    element_tokens.push_back(tok);
    elements.push_back(std::move(e));
  }
  const int n = spins.value_or(std::max(largest, 1));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    try {
      PulseSequence probe(name, n, {elements[i]});
    } catch (const Error& err) {
      throw ParseError(err.what(), element_tokens[i].line, element_tokens[i].column);
    }
  }
  return PulseSequence(name, n, std::move(elements));
}

std::string to_dsl(const PulseSequence& seq) {
  std::string out = "name=" + seq.name() + "\nspins=" + std::to_string(seq.spins()) + "\n";
  for (const auto& e : seq.elements()) out += element_text(e) + "\n";
  return out;
}

}  // namespace spinqft::nmr
