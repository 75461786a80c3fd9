#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mealy {

using state_t = std::uint32_t;
using letter_t = std::uint8_t;

/// A word over the input/output alphabet, letters indexed from 0.
using word = std::vector<letter_t>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation would exceed a configured resource cap.
struct resource_limit_error : error {
  using error::error;
};

/// A non-initial Mealy automaton with n states over an m-letter alphabet.
/// Reading letter x in state q emits output(q, x) and moves to step(q, x);
/// every state therefore induces a length-preserving transformation of
/// finite (and infinite) words.
struct automaton {
  std::size_t m = 1;  ///< alphabet size
  std::size_t n = 1;  ///< state count
  std::vector<state_t> pi;       ///< n*m successor table, row per state
  std::vector<letter_t> lambda;  ///< n*m output table, row per state
  std::string name;

  automaton() : pi(1, 0), lambda(1, 0) {}

  automaton(std::size_t alphabet, std::size_t states, std::string label = {})
      : m(alphabet),
        n(states),
        pi(alphabet * states, 0),
        lambda(alphabet * states, 0),
        name(std::move(label)) {
    if (m == 0 || n == 0) throw error("automaton requires m >= 1 and n >= 1");
  }

  state_t step(state_t q, letter_t x) const { return pi[std::size_t{q} * m + x]; }
  letter_t output(state_t q, letter_t x) const { return lambda[std::size_t{q} * m + x]; }
  state_t& step(state_t q, letter_t x) { return pi[std::size_t{q} * m + x]; }
  letter_t& output(state_t q, letter_t x) { return lambda[std::size_t{q} * m + x]; }

  bool same_tables(const automaton& o) const {
    return m == o.m && n == o.n && pi == o.pi && lambda == o.lambda;
  }
};

/// Row-per-state builder; each row lists m (successor, output) pairs.
inline automaton make_automaton(
    std::string name, std::size_t m,
    std::initializer_list<std::initializer_list<std::pair<state_t, letter_t>>> rows) {
  automaton a(m, rows.size(), std::move(name));
  state_t q = 0;
  for (const auto& row : rows) {
    if (row.size() != m) throw error("make_automaton: row needs exactly m pairs");
    letter_t x = 0;
    for (const auto& [next, out] : row) {
      a.step(q, x) = next;
      a.output(q, x) = out;
      ++x;
    }
    ++q;
  }
  return a;
}

/// One out-of-range table entry found by validate().
struct table_violation {
  state_t state = 0;
  letter_t letter = 0;
  bool in_pi = true;  ///< false: the lambda table
  std::uint64_t value = 0;
  std::uint64_t bound = 0;
};

/// Collect every out-of-range entry; the automaton is valid iff none.
inline std::vector<table_violation> validate(const automaton& a) {
  std::vector<table_violation> out;
  if (a.pi.size() != a.m * a.n || a.lambda.size() != a.m * a.n) {
    out.push_back({0, 0, true, a.pi.size(), a.m * a.n});
    return out;
  }
  for (state_t q = 0; q < a.n; ++q)
    for (letter_t x = 0; x < a.m; ++x) {
      if (a.step(q, x) >= a.n) out.push_back({q, x, true, a.step(q, x), a.n});
      if (a.output(q, x) >= a.m) out.push_back({q, x, false, a.output(q, x), a.m});
    }
  return out;
}

inline bool is_valid(const automaton& a) { return validate(a).empty(); }

/// Run the transformation of state q over a word.  Output length equals
/// input length; the empty word maps to the empty word.
inline word apply(const automaton& a, state_t q, const word& w) {
  if (q >= a.n) throw error("apply: state out of range");
  word out;
  out.reserve(w.size());
  state_t cur = q;
  for (letter_t x : w) {
    if (x >= a.m) throw error("apply: letter out of range");
    out.push_back(a.output(cur, x));
    cur = a.step(cur, x);
  }
  return out;
}

/// The one-state automaton whose transformation is the identity.
inline automaton identity_automaton(std::size_t m) {
  automaton a(m, 1, "identity");
  for (letter_t x = 0; x < m; ++x) {
    a.step(0, x) = 0;
    a.output(0, x) = x;
  }
  return a;
}

/// Product automaton: state (qa, qb), numbered qa*b.n + qb, realizes the
/// composite f_qa . f_qb where the right factor reads raw input first.
inline automaton product(const automaton& a, const automaton& b) {
  if (a.m != b.m) throw error("product: alphabet mismatch");
  automaton p(a.m, a.n * b.n, a.name.empty() || b.name.empty() ? std::string{}
                                                               : a.name + "*" + b.name);
  for (state_t qa = 0; qa < a.n; ++qa)
    for (state_t qb = 0; qb < b.n; ++qb) {
      const state_t s = qa * static_cast<state_t>(b.n) + qb;
      for (letter_t x = 0; x < p.m; ++x) {
        const letter_t y = b.output(qb, x);
        p.output(s, x) = a.output(qa, y);
        p.step(s, x) = a.step(qa, y) * static_cast<state_t>(b.n) + b.step(qb, x);
      }
    }
  return p;
}

/// Left-folded k-th power; state tuples are numbered base-n, leftmost
/// factor most significant.  Guarded by a state cap.
inline automaton power(const automaton& a, unsigned k, std::size_t state_cap = 1'000'000) {
  if (k == 0) throw error("power: exponent must be >= 1");
  std::size_t states = 1;
  for (unsigned i = 0; i < k; ++i) {
    states *= a.n;
    if (states > state_cap) throw resource_limit_error("power: state cap exceeded");
  }
  automaton cur = a;
  for (unsigned i = 1; i < k; ++i) cur = product(cur, a);
  cur.name = a.name;
  return cur;
}

}  // namespace mealy
