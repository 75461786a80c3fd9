#pragma once

#include <cstdint>
#include <vector>

#include "mealy/sequence.hpp"

namespace mealy {

/// Formal power series truncated at a fixed degree, with exact rational
/// coefficients.  All operations stay within the truncation degree.
struct power_series {
  std::vector<rational> c;  ///< c[n] is the coefficient of X^n

  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  rational at(std::size_t n) const { return n < c.size() ? c[n] : rational(0); }

  static power_series zero(std::size_t degree) {
    power_series s;
    s.c.assign(degree + 1, rational(0));
    return s;
  }
  static power_series one(std::size_t degree) {
    power_series s = zero(degree);
    s.c[0] = 1;
    return s;
  }
};

inline power_series add(const power_series& a, const power_series& b) {
  power_series r = power_series::zero(std::max(a.degree(), b.degree()));
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
  return r;
}

inline power_series mul(const power_series& a, const power_series& b, std::size_t degree) {
  power_series r = power_series::zero(degree);
  for (std::size_t i = 0; i <= degree && i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; i + j <= degree && j < b.c.size(); ++j)
      r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

/// 1 / (1 - X^p), truncated.
inline power_series geometric(std::size_t p, std::size_t degree) {
  power_series r = power_series::zero(degree);
  for (std::size_t n = 0; n <= degree; n += p) r.c[n] = 1;
  return r;
}

/// Exact expansion of numer(X)/denom(X) to the given degree; requires a
/// nonzero constant term in the denominator.
inline power_series expand_rational(const std::vector<bigint>& numer,
                                    const std::vector<bigint>& denom, std::size_t degree) {
  if (denom.empty() || denom[0] == 0)
    throw error("expand_rational: denominator needs a nonzero constant term");
  power_series r = power_series::zero(degree);
  const rational d0(denom[0]);
  for (std::size_t n = 0; n <= degree; ++n) {
    rational acc = n < numer.size() ? rational(numer[n]) : rational(0);
    for (std::size_t k = 1; k <= n && k < denom.size(); ++k)
      acc -= rational(denom[k]) * r.c[n - k];
    r.c[n] = acc / d0;
  }
  return r;
}

inline bool integer_coefficients(const power_series& s) {
  for (const auto& v : s.c)
    if (boost::multiprecision::denominator(v) != 1) return false;
  return true;
}

/// Coefficients as an exact integer sequence indexed from 0.
inline int_sequence to_int_sequence(const power_series& s) {
  int_sequence out;
  out.start = 0;
  for (const auto& v : s.c) {
    if (boost::multiprecision::denominator(v) != 1)
      throw error("to_int_sequence: non-integer coefficient");
    out.values.push_back(bigint(boost::multiprecision::numerator(v)));
  }
  return out;
}

/// Growth series of the intermediate-growth machine: the nested expression
///
///   1/(1-X)^2 (1 + X/(1-X) (1 + X^2/(1-X^2) (1 + X^4/(1-X^4) (1 + ...))))
///
/// evaluated from the innermost level L with 2^L > degree outward; deeper
/// levels are 1 + O(X^{2^L}) and cannot affect the truncation.
inline power_series nested_intermediate_series(std::size_t degree) {
  std::size_t level = 0;
  while ((std::size_t{1} << level) <= degree) ++level;
  power_series t = power_series::one(degree);
  while (level-- > 0) {
    const std::size_t p = std::size_t{1} << level;
    // X^p/(1-X^p) * t, then + 1
    power_series tail = power_series::zero(degree);
    for (std::size_t n = p; n <= degree; n += p) tail.c[n] = 1;
    t = mul(tail, t, degree);
    t.c[0] += 1;
  }
  const power_series g = geometric(1, degree);
  return mul(mul(t, g, degree), g, degree);
}

// --- dense integer polynomials (coefficient vectors, index = degree) --------

inline std::vector<bigint> poly_mul(const std::vector<bigint>& a, const std::vector<bigint>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<bigint> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline std::vector<bigint> poly_add(std::vector<bigint> a, const std::vector<bigint>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

/// True iff (1 - X) * gamma matches the word-growth values on the overlap
/// of delta's index range with the truncation degree.
inline bool delta_matches_gamma(const power_series& gamma, const int_sequence& delta) {
  for (long n = std::max(0L, delta.start); n <= static_cast<long>(gamma.degree()); ++n) {
    if (n >= delta.end()) break;
    const rational expected =
        n == 0 ? gamma.at(0) : gamma.at(static_cast<std::size_t>(n)) - gamma.at(static_cast<std::size_t>(n - 1));
    if (expected != rational(delta.at(n))) return false;
  }
  return true;
}

}  // namespace mealy
