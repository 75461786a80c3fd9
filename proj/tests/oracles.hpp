#pragma once

// Test-side oracles, deliberately independent of the library's product,
// minimization and enumeration code paths: everything here works by running
// transformations letter by letter with apply() and comparing raw output
// words.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mealy/automaton.hpp"

namespace oracle {

using mealy::automaton;
using mealy::letter_t;
using mealy::state_t;
using mealy::word;

inline std::vector<word> all_words(std::size_t m, unsigned len) {
  std::vector<word> out{word{}};
  std::vector<word> cur{word{}};
  for (unsigned l = 1; l <= len; ++l) {
    std::vector<word> next;
    for (const auto& w : cur)
      for (letter_t x = 0; x < m; ++x) {
        word e = w;
        e.push_back(x);
        out.push_back(e);
        next.push_back(std::move(e));
      }
    cur = std::move(next);
  }
  return out;
}

/// Apply the composite of a state word (rightmost state reads raw input
/// first) one whole-word application at a time.
inline word composite_apply(const automaton& a, const std::vector<state_t>& states, word input) {
  for (std::size_t i = states.size(); i-- > 0;) input = mealy::apply(a, states[i], input);
  return input;
}

/// Fingerprint of the transformation of a state word: its outputs on every
/// input word of length up to len.
inline std::string transformation_key(const automaton& a, const std::vector<state_t>& states,
                                      unsigned len) {
  std::string key;
  for (const auto& w : all_words(a.m, len)) {
    const word out = composite_apply(a, states, w);
    for (letter_t x : out) key.push_back(static_cast<char>('0' + x));
    key.push_back('|');
  }
  return key;
}

/// Spherical growth by brute force: distinct transformation fingerprints
/// over all state words of length n.  Only usable when keys of length
/// key_len separate everything, i.e. for very small powers.
inline std::size_t brute_spherical(const automaton& a, unsigned n, unsigned key_len) {
  std::set<std::string> keys;
  std::vector<std::vector<state_t>> words{{}};
  for (unsigned l = 0; l < n; ++l) {
    std::vector<std::vector<state_t>> next;
    for (const auto& w : words)
      for (state_t q = 0; q < a.n; ++q) {
        auto e = w;
        e.push_back(q);
        next.push_back(std::move(e));
      }
    words = std::move(next);
  }
  for (const auto& w : words) keys.insert(transformation_key(a, w, key_len));
  return keys.size();
}

/// Exhaustive count of representations n = sum_{i=0}^{k} p_i 2^i with
/// p_i >= 1: depth-first over the tuple (p_0, ..., p_k) for every k.
inline long partitions_pow2_rec(long remaining, unsigned i, unsigned k) {
  const long w = 1L << i;
  if (i == k) return remaining >= w && remaining % w == 0 ? 1 : 0;
  long total = 0;
  for (long p = 1; p * w <= remaining; ++p)
    total += partitions_pow2_rec(remaining - p * w, i + 1, k);
  return total;
}

inline long partitions_pow2_exhaustive(long n) {
  if (n == 0) return 1;  // seed convention
  long count = 0;
  for (unsigned k = 0; (1L << (k + 1)) - 1 <= n; ++k) count += partitions_pow2_rec(n, 0, k);
  return count;
}

}  // namespace oracle
