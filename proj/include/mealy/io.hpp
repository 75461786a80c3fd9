#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mealy/automaton.hpp"

namespace mealy {

struct parse_error : error {
  int line = 0;
  int column = 0;
  parse_error(const std::string& msg, int ln, int col)
      : error(msg + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
        line(ln),
        column(col) {}
};

namespace detail {

/// Cursor over the automaton text format.  '#' starts a comment running to
/// the end of the line; tokens are separated by arbitrary whitespace.
class text_cursor {
 public:
  explicit text_cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, col_); }

  /// Next run of characters up to whitespace or a delimiter.
  std::string token() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    std::string t;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '(' || c == ')' ||
          c == ',' || c == ':')
        break;
      t.push_back(c);
      ++pos_;
      ++col_;
    }
    if (t.empty()) fail("expected a token");
    return t;
  }

  void expect_char(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
    ++col_;
  }

  long expect_number(const std::string& what) {
    const std::string t = token();
    try {
      std::size_t used = 0;
      const long v = std::stol(t, &used);
      if (used != t.size() || v < 0) fail("expected a non-negative " + what);
      return v;
    } catch (const parse_error&) {
      throw;
    } catch (...) {
      fail("expected a number for " + what);
    }
  }

  /// A prefixed index like q3 or x1.
  long expect_indexed(char prefix, const std::string& what) {
    const std::string t = token();
    if (t.size() < 2 || t[0] != prefix) fail("expected " + what);
    try {
      std::size_t used = 0;
      const long v = std::stol(t.substr(1), &used);
      if (used != t.size() - 1 || v < 0) fail("expected " + what);
      return v;
    } catch (const parse_error&) {
      throw;
    } catch (...) {
      fail("expected " + what);
    }
  }

  void expect_keyword(const std::string& kw) {
    const std::string t = token();
    if (t != kw) fail("expected keyword '" + kw + "'");
  }

  int line() const { return line_; }
  int column() const { return col_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace detail

/// Parse the one-automaton text format:
///
///   automaton <name>
///   alphabet <m>
///   states <n>
///   q0: (q1,x0) (q0,x1) ...   # exactly m (successor, output) pairs
///
/// Pair t on a state line gives the transition and output on letter x_t.
inline automaton parse_automaton(std::string_view text) {
  detail::text_cursor cur(text);
  cur.expect_keyword("automaton");
  const std::string name = cur.token();
  cur.expect_keyword("alphabet");
  const long m = cur.expect_number("alphabet size");
  cur.expect_keyword("states");
  const long n = cur.expect_number("state count");
  if (m < 1 || n < 1) cur.fail("alphabet size and state count must be >= 1");
  if (m > 255) cur.fail("alphabet size above the letter representation limit");

  automaton a(static_cast<std::size_t>(m), static_cast<std::size_t>(n), name);
  for (long q = 0; q < n; ++q) {
    const long row = cur.expect_indexed('q', "state label q<i>");
    if (row != q) cur.fail("state rows must appear in order; expected q" + std::to_string(q));
    cur.expect_char(':');
    for (long x = 0; x < m; ++x) {
      cur.skip_space();
      cur.expect_char('(');
      const long target = cur.expect_indexed('q', "state index q<j>");
      cur.expect_char(',');
      const long out = cur.expect_indexed('x', "letter index x<k>");
      cur.expect_char(')');
      if (target >= n) cur.fail("state index out of range: q" + std::to_string(target));
      if (out >= m) cur.fail("letter index out of range: x" + std::to_string(out));
      a.step(static_cast<state_t>(q), static_cast<letter_t>(x)) = static_cast<state_t>(target);
      a.output(static_cast<state_t>(q), static_cast<letter_t>(x)) = static_cast<letter_t>(out);
    }
    // reject extra pairs on the line
    cur.skip_space();
  }
  if (!cur.at_end()) cur.fail("trailing input after the last state row");
  return a;
}

/// Canonical text form; parse(serialize(a)) reproduces a's tables exactly.
inline std::string serialize(const automaton& a) {
  std::string name = a.name.empty() ? std::string("unnamed") : a.name;
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
      throw error("serialize: automaton name must be a single token");
  std::ostringstream os;
  os << "automaton " << name << "\n";
  os << "alphabet " << a.m << "\n";
  os << "states " << a.n << "\n";
  for (state_t q = 0; q < a.n; ++q) {
    os << "q" << q << ":";
    for (letter_t x = 0; x < a.m; ++x)
      os << " (q" << a.step(q, x) << ",x" << static_cast<unsigned>(a.output(q, x)) << ")";
    os << "\n";
  }
  return os.str();
}

inline nlohmann::ordered_json to_json(const automaton& a) {
  nlohmann::ordered_json j;
  j["name"] = a.name;
  j["m"] = a.m;
  j["n"] = a.n;
  auto pi = nlohmann::ordered_json::array();
  auto lambda = nlohmann::ordered_json::array();
  for (state_t q = 0; q < a.n; ++q) {
    auto prow = nlohmann::ordered_json::array();
    auto lrow = nlohmann::ordered_json::array();
    for (letter_t x = 0; x < a.m; ++x) {
      prow.push_back(a.step(q, x));
      lrow.push_back(a.output(q, x));
    }
    pi.push_back(std::move(prow));
    lambda.push_back(std::move(lrow));
  }
  j["pi"] = std::move(pi);
  j["lambda"] = std::move(lambda);
  return j;
}

inline automaton automaton_from_json(const nlohmann::json& j) {
  const std::size_t m = j.at("m").get<std::size_t>();
  const std::size_t n = j.at("n").get<std::size_t>();
  if (m < 1 || n < 1) throw error("automaton json: m and n must be >= 1");
  if (m > 255) throw error("automaton json: alphabet too large");
  automaton a(m, n, j.value("name", std::string{}));
  const auto& pi = j.at("pi");
  const auto& lambda = j.at("lambda");
  if (pi.size() != n || lambda.size() != n) throw error("automaton json: wrong row count");
  for (state_t q = 0; q < n; ++q) {
    if (pi[q].size() != m || lambda[q].size() != m)
      throw error("automaton json: wrong column count");
    for (letter_t x = 0; x < m; ++x) {
      const auto target = pi[q][x].get<std::uint64_t>();
      const auto out = lambda[q][x].get<std::uint64_t>();
      if (target >= n) throw error("automaton json: state index out of range");
      if (out >= m) throw error("automaton json: letter index out of range");
      a.step(q, x) = static_cast<state_t>(target);
      a.output(q, x) = static_cast<letter_t>(out);
    }
  }
  return a;
}

inline automaton load_automaton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open automaton file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
    return automaton_from_json(nlohmann::json::parse(text));
  return parse_automaton(text);
}

inline void save_automaton_file(const automaton& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write automaton file: " + path);
  out << serialize(a);
}

}  // namespace mealy
