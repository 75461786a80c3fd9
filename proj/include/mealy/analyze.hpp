#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mealy/closed_forms.hpp"
#include "mealy/sequence.hpp"

namespace mealy {

/// Exact polynomial in the sequence's own index, valid from some index on.
struct polynomial_fit {
  std::vector<rational> coeffs;  ///< sum coeffs[i] * n^i
  long valid_from = 0;
  unsigned degree() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
  bool operator==(const polynomial_fit& o) const { return coeffs == o.coeffs; }
};

/// Eventually constant-ratio form value(n) = scale0 * ratio^n + offset,
/// with scale0 normalized to index 0 of the sequence's index domain.
struct exponential_fit {
  rational scale0;
  rational ratio;
  rational offset;
  long valid_from = 0;
  bool operator==(const exponential_fit& o) const {
    return scale0 == o.scale0 && ratio == o.ratio && offset == o.offset;
  }
};

using fitted_form = std::variant<polynomial_fit, exponential_fit>;

inline bool same_form(const fitted_form& a, const fitted_form& b) { return a == b; }

namespace detail {

inline rational eval_poly(const std::vector<rational>& coeffs, long n) {
  rational acc = 0, pw = 1;
  for (const auto& c : coeffs) {
    acc += c * pw;
    pw *= n;
  }
  return acc;
}

/// Exact Lagrange interpolation through (xs[i], ys[i]).
inline std::vector<rational> interpolate(const std::vector<long>& xs,
                                         const std::vector<rational>& ys) {
  const std::size_t d = xs.size();
  std::vector<rational> acc(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    // basis polynomial for node i
    std::vector<rational> basis{1};
    rational denom = 1;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      denom *= rational(xs[i] - xs[j]);
      std::vector<rational> next(basis.size() + 1, 0);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t] -= basis[t] * xs[j];
        next[t + 1] += basis[t];
      }
      basis = std::move(next);
    }
    const rational w = ys[i] / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * w;
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

}  // namespace detail

/// Least degree d <= degmax whose (d+1)-th finite difference vanishes on a
/// suffix; the polynomial is recovered from the stabilized tail and the
/// threshold reports how far back it reproduces the data.  Requires at
/// least degree+2 matching points, so a bare interpolation cannot pass.
inline std::optional<polynomial_fit> fit_eventually_polynomial(const int_sequence& s,
                                                               unsigned degmax) {
  for (unsigned d = 0; d <= degmax; ++d) {
    if (s.values.size() < d + 2u) break;
    const int_sequence diff = finite_difference(s, d + 1);
    long zero_from = diff.end();
    while (zero_from > diff.start && diff.at(zero_from - 1) == 0) --zero_from;
    const long zeros = diff.end() - zero_from;
    if (zeros < 2) continue;
    // interpolate through the last d+1 points
    std::vector<long> xs;
    std::vector<rational> ys;
    for (long n = s.end() - static_cast<long>(d) - 1; n < s.end(); ++n) {
      xs.push_back(n);
      ys.push_back(rational(s.at(n)));
    }
    polynomial_fit fit;
    fit.coeffs = detail::interpolate(xs, ys);
    long from = s.end() - 1;
    while (from > s.start && detail::eval_poly(fit.coeffs, from - 1) == rational(s.at(from - 1)))
      --from;
    fit.valid_from = from;
    if (s.end() - from >= static_cast<long>(d) + 2) return fit;
  }
  return std::nullopt;
}

/// Eventually constant-ratio exponential with a small additive offset; the
/// offsets tried are 0, +-1, +-2.  Needs at least three consecutive equal
/// ratios on the suffix and |ratio| > 1.
inline std::optional<exponential_fit> fit_eventually_exponential(const int_sequence& s) {
  if (s.values.size() < 4) return std::nullopt;
  for (long off : {0L, -1L, 1L, -2L, 2L}) {
    const rational c(off);
    bool nonzero = true;
    for (long n = s.end() - 4; n < s.end(); ++n)
      if (rational(s.at(n)) == c) nonzero = false;
    if (!nonzero) continue;
    const rational ratio = (rational(s.at(s.end() - 1)) - c) / (rational(s.at(s.end() - 2)) - c);
    if (boost::multiprecision::abs(boost::multiprecision::numerator(ratio)) <=
        boost::multiprecision::abs(boost::multiprecision::denominator(ratio)))
      continue;  // |ratio| <= 1
    long from = s.end() - 1;
    while (from > s.start) {
      const rational prev = rational(s.at(from - 1)) - c;
      if (prev == 0 || (rational(s.at(from)) - c) != ratio * prev) break;
      --from;
    }
    if (s.end() - from < 4) continue;  // need >= 3 ratio steps
    exponential_fit fit;
    fit.ratio = ratio;
    fit.offset = c;
    fit.valid_from = from;
    // normalize the scale to index 0:  value(n) - c = scale0 * ratio^n
    rational scale = rational(s.at(from)) - c;
    for (long i = 0; i < from; ++i) scale /= ratio;
    for (long i = from; i < 0; ++i) scale *= ratio;
    fit.scale0 = scale;
    return fit;
  }
  return std::nullopt;
}

inline std::optional<fitted_form> fit_any(const int_sequence& s, unsigned degmax) {
  if (auto p = fit_eventually_polynomial(s, degmax)) return fitted_form{*p};
  if (auto e = fit_eventually_exponential(s)) return fitted_form{*e};
  return std::nullopt;
}

struct composite_part {
  unsigned residue = 0;
  fitted_form form;
};

/// Verdict of the composite-structure probe: reproducible from the
/// sequence alone, bounded by kmax/degmax, and never an asymptotic claim.
struct composite_verdict {
  bool composite = false;
  unsigned k = 0;
  std::vector<composite_part> parts;
  std::optional<std::pair<unsigned, unsigned>> witness;  ///< residues with differing forms
  std::string note;
};

/// Smallest k in [2, kmax] whose residue subsequences each admit an
/// eventual polynomial or constant-ratio exponential form with at least
/// two residues differing, while the whole sequence admits no single such
/// form.
inline composite_verdict detect_composite(const int_sequence& s, unsigned kmax, unsigned degmax) {
  composite_verdict v;
  if (fit_any(s, degmax)) {
    v.note = "whole sequence admits a single closed form";
    return v;
  }
  for (unsigned k = 2; k <= kmax; ++k) {
    const auto parts = split_residues(s, k);
    std::vector<composite_part> fitted;
    bool all = true;
    for (unsigned i = 0; i < k && all; ++i) {
      if (auto f = fit_any(parts[i], degmax))
        fitted.push_back({i, *f});
      else
        all = false;
    }
    if (!all) continue;
    for (unsigned i = 0; i < k && !v.witness; ++i)
      for (unsigned j = i + 1; j < k && !v.witness; ++j)
        if (!same_form(fitted[i].form, fitted[j].form)) v.witness = {i, j};
    if (!v.witness) continue;  // all residues share one form
    v.composite = true;
    v.k = k;
    v.parts = std::move(fitted);
    return v;
  }
  v.note = "not composite within bounds";
  return v;
}

// --- growth-order comparison ------------------------------------------------

enum class order_relation { preceq, succeq, equivalent, incomparable };

struct order_witness {
  unsigned c1 = 1, c2 = 1;
  long n0 = 0;
};

struct order_bounds {
  unsigned c1max = 8;
  unsigned c2max = 4;
  long n0max = 10;
  long min_points = 5;  ///< fewest indices a witness must actually cover
};

namespace detail {

inline std::optional<order_witness> dominates(const int_sequence& s1, const int_sequence& s2,
                                              const order_bounds& b) {
  for (unsigned c2 = 1; c2 <= b.c2max; ++c2)
    for (unsigned c1 = 1; c1 <= b.c1max; ++c1)
      for (long n0 = 0; n0 <= b.n0max; ++n0) {
        long lo = std::max(n0, s1.start);
        while (static_cast<long>(c2) * lo < s2.start) ++lo;
        long hi = s1.end() - 1;
        while (hi >= lo && static_cast<long>(c2) * hi >= s2.end()) --hi;
        if (hi - lo + 1 < b.min_points) continue;
        bool ok = true;
        for (long n = lo; n <= hi && ok; ++n)
          ok = s1.at(n) <= bigint(c1) * s2.at(static_cast<long>(c2) * n);
        if (ok) return order_witness{c1, c2, n0};
      }
  return std::nullopt;
}

}  // namespace detail

struct order_compare_result {
  order_relation relation = order_relation::incomparable;
  std::optional<order_witness> forward;   ///< s1(n) <= c1 * s2(c2 n)
  std::optional<order_witness> backward;  ///< s2(n) <= c1 * s1(c2 n)
  order_bounds bounds;
};

/// Bounded diagnostic for growth-order domination on the available range.
/// Finite data cannot settle an asymptotic statement, so the result always
/// carries the bounds it was computed under.
inline order_compare_result order_compare(const int_sequence& s1, const int_sequence& s2,
                                          order_bounds bounds = {}) {
  order_compare_result r;
  r.bounds = bounds;
  r.forward = detail::dominates(s1, s2, bounds);
  r.backward = detail::dominates(s2, s1, bounds);
  if (r.forward && r.backward)
    r.relation = order_relation::equivalent;
  else if (r.forward)
    r.relation = order_relation::preceq;
  else if (r.backward)
    r.relation = order_relation::succeq;
  else
    r.relation = order_relation::incomparable;
  return r;
}

}  // namespace mealy
