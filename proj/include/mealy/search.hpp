#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/enumerate.hpp"
#include "mealy/minimize.hpp"

namespace mealy {

struct search_query {
  std::size_t states = 3;
  std::size_t letters = 2;
  /// Required spherical growth, index 0 = level 1.  A hit matches exactly.
  std::vector<std::uint64_t> prefix;
  /// Keep only tables that are lexicographically minimal over state
  /// relabelings.
  bool canonical = false;
  /// Keep only automata in which some state induces the identity.
  bool require_identity_state = false;
  std::uint64_t table_budget = 100'000'000;
  std::size_t result_cap = 10'000;
};

struct search_result {
  std::vector<automaton> hits;
  std::uint64_t tables_scanned = 0;
  bool budget_exceeded = false;
  bool result_cap_hit = false;
};

namespace detail {

/// Flattened (pi, lambda) tables under a state relabeling rho.
inline void relabel_tables(const automaton& a, const std::vector<state_t>& rho,
                           std::vector<std::uint32_t>& out) {
  out.clear();
  const auto n = a.n;
  const auto m = a.m;
  out.resize(2 * n * m);
  for (state_t q = 0; q < n; ++q)
    for (letter_t x = 0; x < m; ++x) {
      out[std::size_t{rho[q]} * m + x] = rho[a.step(q, x)];
      out[n * m + std::size_t{rho[q]} * m + x] = a.output(q, x);
    }
}

inline bool is_canonical_form(const automaton& a) {
  std::vector<state_t> rho(a.n);
  std::iota(rho.begin(), rho.end(), 0);
  std::vector<std::uint32_t> self, other;
  relabel_tables(a, rho, self);
  while (std::next_permutation(rho.begin(), rho.end())) {
    relabel_tables(a, rho, other);
    if (other < self) return false;
  }
  return true;
}

/// Spherical growth equals the prefix exactly, aborting at the first level
/// that disagrees.
inline bool matches_prefix(const automaton& a, const std::vector<std::uint64_t>& prefix,
                           std::size_t element_cap) {
  enumerate_options opts;
  opts.element_cap = element_cap;
  opts.level_probe = [&](unsigned level, const growth_tables& t) {
    return t.spherical[level] == prefix[level - 1];
  };
  const auto e = enumerate_growth(a, static_cast<unsigned>(prefix.size()), opts);
  if (e.tables.truncated || e.tables.levels() != prefix.size()) return false;
  return e.tables.spherical[prefix.size()] == prefix.back();
}

}  // namespace detail

/// Exhaustively scan every (pi, lambda) table over the requested state and
/// letter counts, returning the automata whose spherical growth matches the
/// prefix exactly.  Deterministic order: tables are visited lexicographically
/// (pi rows first, then lambda rows).
inline search_result search_automata(const search_query& q) {
  if (q.states < 1 || q.letters < 1 || q.letters > 255)
    throw error("search_automata: bad dimensions");
  if (q.prefix.empty()) throw error("search_automata: empty growth prefix");

  search_result res;
  const std::size_t cells = q.states * q.letters;
  automaton a(q.letters, q.states);

  // element cap: a matching run can register at most the prefix total
  std::size_t cap = 2;
  for (auto v : q.prefix) cap += v;

  std::vector<std::uint32_t> digits(2 * cells, 0);  // pi digits then lambda digits
  for (;;) {
    if (res.tables_scanned >= q.table_budget) {
      res.budget_exceeded = true;
      break;
    }
    ++res.tables_scanned;
    for (std::size_t i = 0; i < cells; ++i) a.pi[i] = digits[i];
    for (std::size_t i = 0; i < cells; ++i) a.lambda[i] = static_cast<letter_t>(digits[cells + i]);

    bool consider = !q.canonical || detail::is_canonical_form(a);
    if (consider && q.require_identity_state) {
      const auto ids = identity_states(a);
      consider = std::find(ids.begin(), ids.end(), true) != ids.end();
    }
    if (consider && detail::matches_prefix(a, q.prefix, cap)) {
      if (res.hits.size() >= q.result_cap) {
        res.result_cap_hit = true;
        break;
      }
      automaton hit = a;
      hit.name = "hit" + std::to_string(res.hits.size());
      res.hits.push_back(std::move(hit));
    }

    // advance the odometer: last digit fastest
    std::size_t pos = digits.size();
    while (pos-- > 0) {
      const std::uint32_t base =
          pos < cells ? static_cast<std::uint32_t>(q.states) : static_cast<std::uint32_t>(q.letters);
      if (++digits[pos] < base) break;
      digits[pos] = 0;
      if (pos == 0) return res;  // full wrap: every table visited
    }
  }
  return res;
}

}  // namespace mealy
