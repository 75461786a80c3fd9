#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mealy/automaton.hpp"

namespace mealy {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Contiguous run of exact integers starting at an absolute index.
struct int_sequence {
  long start = 0;
  std::vector<bigint> values;

  long end() const { return start + static_cast<long>(values.size()); }  ///< exclusive
  bool contains(long n) const { return n >= start && n < end(); }
  const bigint& at(long n) const {
    if (!contains(n)) throw error("int_sequence: index out of range");
    return values[static_cast<std::size_t>(n - start)];
  }

  static int_sequence from_u64(const std::vector<std::uint64_t>& v, long start_index) {
    int_sequence s;
    s.start = start_index;
    s.values.assign(v.begin(), v.end());
    return s;
  }
};

/// Iterated backward difference; the result starts `order` places later.
inline int_sequence finite_difference(const int_sequence& s, unsigned order = 1) {
  if (order >= s.values.size()) throw error("finite_difference: order too large");
  int_sequence cur = s;
  for (unsigned i = 0; i < order; ++i) {
    int_sequence next;
    next.start = cur.start + 1;
    next.values.reserve(cur.values.size() - 1);
    for (std::size_t j = 1; j < cur.values.size(); ++j)
      next.values.push_back(cur.values[j] - cur.values[j - 1]);
    cur = std::move(next);
  }
  return cur;
}

/// Running sums; inverse of the first difference up to the lost prefix.
inline int_sequence cumulative_sum(const int_sequence& s) {
  int_sequence r;
  r.start = s.start;
  bigint acc = 0;
  for (const auto& v : s.values) {
    acc += v;
    r.values.push_back(acc);
  }
  return r;
}

/// Least index n with s(n) < s(n-1), if any.
inline std::optional<long> first_descent(const int_sequence& s) {
  for (long n = s.start + 1; n < s.end(); ++n)
    if (s.at(n) < s.at(n - 1)) return n;
  return std::nullopt;
}

/// Residue subsequences: part i holds the values at absolute indices
/// congruent to i mod k, re-indexed by j with absolute = k*j + i.
inline std::vector<int_sequence> split_residues(const int_sequence& s, unsigned k) {
  if (k < 2) throw error("split_residues: k must be >= 2");
  std::vector<int_sequence> parts(k);
  for (unsigned i = 0; i < k; ++i) {
    long j = s.start / static_cast<long>(k);
    while (static_cast<long>(k) * j + static_cast<long>(i) < s.start) ++j;
    parts[i].start = j;
  }
  for (long n = s.start; n < s.end(); ++n) parts[static_cast<unsigned>(n % k)].values.push_back(s.at(n));
  return parts;
}

inline std::string to_string(const int_sequence& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) out += ",";
    out += s.values[i].str();
  }
  out += "] from n=" + std::to_string(s.start);
  return out;
}

}  // namespace mealy
