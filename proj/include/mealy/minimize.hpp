#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mealy/automaton.hpp"

namespace mealy {

/// Partition of states into behavioral-equivalence classes.  Class indices
/// are dense in [0, class_count), numbered by first occurrence in state order.
struct state_partition {
  std::vector<std::uint32_t> class_of;
  std::uint32_t class_count = 0;
};

namespace detail {

struct u32_vec_hash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Moore-style signature refinement over an arbitrary finite transition
/// system: nodes are grouped by output row, then repeatedly regrouped by
/// (class, classes of successors) until the class count stops growing.
/// The result is the coarsest partition in which merged nodes are
/// bisimilar, i.e. define the same transformation.
template <class OutAt, class NextAt>
state_partition refine_tables(std::size_t count, std::size_t m, OutAt out_at, NextAt next_at) {
  state_partition p;
  p.class_of.assign(count, 0);
  if (count == 0) return p;

  {
    std::unordered_map<std::string, std::uint32_t> seen;
    std::string key;
    for (std::size_t i = 0; i < count; ++i) {
      key.clear();
      for (std::size_t x = 0; x < m; ++x) key.push_back(static_cast<char>(out_at(i, x)));
      auto [it, fresh] = seen.try_emplace(key, static_cast<std::uint32_t>(seen.size()));
      (void)fresh;
      p.class_of[i] = it->second;
    }
    p.class_count = static_cast<std::uint32_t>(seen.size());
  }

  std::vector<std::uint32_t> next_cls(count);
  std::vector<std::uint32_t> sig(m + 1);
  for (;;) {
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, u32_vec_hash> seen;
    seen.reserve(count * 2);
    for (std::size_t i = 0; i < count; ++i) {
      sig[0] = p.class_of[i];
      for (std::size_t x = 0; x < m; ++x) sig[x + 1] = p.class_of[next_at(i, x)];
      auto [it, fresh] = seen.try_emplace(sig, static_cast<std::uint32_t>(seen.size()));
      (void)fresh;
      next_cls[i] = it->second;
    }
    const auto new_count = static_cast<std::uint32_t>(seen.size());
    if (new_count == p.class_count) break;
    p.class_of.swap(next_cls);
    p.class_count = new_count;
  }
  return p;
}

}  // namespace detail

/// Coarsest partition putting two states together iff they induce equal
/// transformations on all finite words.
inline state_partition refine_partition(const automaton& a) {
  return detail::refine_tables(
      a.n, a.m, [&](std::size_t q, std::size_t x) { return a.output(static_cast<state_t>(q), static_cast<letter_t>(x)); },
      [&](std::size_t q, std::size_t x) { return a.step(static_cast<state_t>(q), static_cast<letter_t>(x)); });
}

struct minimized {
  automaton quotient;
  state_partition partition;
};

/// Quotient automaton with one state per equivalence class.  No
/// reachability pruning: all states are kept and merged by behavior only.
inline minimized minimize(const automaton& a) {
  state_partition p = refine_partition(a);
  automaton q(a.m, p.class_count, a.name);
  std::vector<state_t> rep(p.class_count, 0);
  std::vector<bool> have(p.class_count, false);
  for (state_t s = 0; s < a.n; ++s) {
    const auto c = p.class_of[s];
    if (!have[c]) {
      have[c] = true;
      rep[c] = s;
      for (letter_t x = 0; x < a.m; ++x) {
        q.step(c, x) = p.class_of[a.step(s, x)];
        q.output(c, x) = a.output(s, x);
      }
    }
  }
  // quotient must be well defined: every member of a class maps the same way
  for (state_t s = 0; s < a.n; ++s) {
    const auto c = p.class_of[s];
    for (letter_t x = 0; x < a.m; ++x) {
      if (q.step(c, x) != p.class_of[a.step(s, x)] || q.output(c, x) != a.output(s, x))
        throw error("minimize: refinement fixpoint is not a congruence");
    }
  }
  return {std::move(q), std::move(p)};
}

/// True iff state qa of a and state qb of b are behaviorally equal;
/// decided by refining the disjoint union.
inline bool equivalent_states(const automaton& a, state_t qa, const automaton& b, state_t qb) {
  if (a.m != b.m) throw error("equivalent_states: alphabet mismatch");
  if (qa >= a.n || qb >= b.n) throw error("equivalent_states: state out of range");
  const std::size_t total = a.n + b.n;
  auto out_at = [&](std::size_t i, std::size_t x) {
    return i < a.n ? a.output(static_cast<state_t>(i), static_cast<letter_t>(x))
                   : b.output(static_cast<state_t>(i - a.n), static_cast<letter_t>(x));
  };
  auto next_at = [&](std::size_t i, std::size_t x) -> std::size_t {
    return i < a.n ? a.step(static_cast<state_t>(i), static_cast<letter_t>(x))
                   : a.n + b.step(static_cast<state_t>(i - a.n), static_cast<letter_t>(x));
  };
  const auto p = detail::refine_tables(total, a.m, out_at, next_at);
  return p.class_of[qa] == p.class_of[a.n + qb];
}

/// Which states of a induce the identity transformation.
inline std::vector<bool> identity_states(const automaton& a) {
  std::vector<bool> res(a.n, false);
  const std::size_t total = a.n + 1;  // extra node: the identity transformation

  auto out_at = [&](std::size_t i, std::size_t x) {
    return i < a.n ? a.output(static_cast<state_t>(i), static_cast<letter_t>(x))
                   : static_cast<letter_t>(x);
  };
  auto next_at = [&](std::size_t i, std::size_t x) -> std::size_t {
    return i < a.n ? a.step(static_cast<state_t>(i), static_cast<letter_t>(x)) : a.n;
  };
  const auto p = detail::refine_tables(total, a.m, out_at, next_at);
  for (state_t q = 0; q < a.n; ++q) res[q] = p.class_of[q] == p.class_of[a.n];
  return res;
}

/// Growth of the automaton itself: gamma(k) = state count of the minimal
/// automaton equivalent to the k-th power.  Exact but exponential in k,
/// so it serves as the small-range oracle for the level enumeration.
inline std::vector<std::size_t> growth_by_minimization(const automaton& a, unsigned nmax,
                                                       std::size_t state_cap = 1'000'000) {
  std::vector<std::size_t> gamma;
  gamma.reserve(nmax);
  std::size_t states = 1;
  automaton cur = a;
  for (unsigned k = 1; k <= nmax; ++k) {
    states *= a.n;
    if (states > state_cap)
      throw resource_limit_error("growth_by_minimization: state cap exceeded");
    if (k > 1) cur = product(cur, a);
    gamma.push_back(refine_partition(cur).class_count);
  }
  return gamma;
}

}  // namespace mealy
