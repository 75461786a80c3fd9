#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mealy/sequence.hpp"

namespace mealy {

/// Fibonacci numbers with the seed F(0) = F(1) = 1.
inline bigint fibonacci(unsigned k) {
  bigint a = 1, b = 1;
  for (unsigned i = 0; i < k; ++i) {
    bigint c = a + b;
    a = b;
    b = c;
  }
  return a;
}

/// Binomial coefficient with the standard convention: zero iff k > n,
/// k < 0 or n < 0.
inline bigint binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  bigint r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Number of representations n = sum p_i 2^i with k >= 0 and every
/// p_i >= 1 ("sequential" powers of two).  The value at 0 is defined as 1,
/// the seed of the second-difference recurrence.
inline bigint partitions_pow2(unsigned n) {
  if (n == 0) return 1;
  // ways[r] = partitions of r into powers 2^0..2^k with repetitions;
  // subtracting the mandatory minimum 2^{k+1}-1 leaves a free remainder
  std::vector<bigint> ways(n + 1, 0);
  ways[0] = 1;
  bigint total = 0;
  unsigned long mandatory = 1;  // 2^{k+1} - 1 at the current k
  for (unsigned k = 0; mandatory <= n; ++k) {
    const unsigned long pow_k = 1ul << k;
    for (unsigned long r = pow_k; r <= n; ++r) ways[r] += ways[r - pow_k];
    total += ways[n - mandatory];
    mandatory += pow_k * 2;
  }
  return total;
}

/// Per-residue closed-form descriptor for a growth function: a modulus k,
/// one form per residue class, a validity threshold per form, and explicit
/// exceptional values below the thresholds.
struct closed_form_part {
  enum class form { polynomial, scaled_pow2, binomial_sum, fibonacci_combo };
  form kind = form::polynomial;
  unsigned residue = 0;
  long n0 = 1;  ///< valid for n >= n0 with n in this residue class

  std::vector<rational> poly;  ///< polynomial: sum poly[i] * n^i

  rational a, c;  ///< scaled_pow2: a * 2^((n-b)/half) + c
  long b = 0;
  unsigned half = 2;

  unsigned m = 0;  ///< binomial_sum alphabet parameter

  /// fibonacci_combo: sum coeff * F(floor(n/2) + shift) + lin*n + cst
  std::vector<std::pair<bigint, long>> phi_terms;
  bigint lin = 0, cst = 0;
};

struct closed_form {
  std::string name;
  unsigned modulus = 1;
  std::vector<closed_form_part> parts;  ///< one per residue 0..modulus-1
  std::map<long, bigint> exceptions;
  long min_n = 1;
};

inline bigint eval_part(const closed_form_part& p, long n) {
  switch (p.kind) {
    case closed_form_part::form::polynomial: {
      rational acc = 0;
      rational pw = 1;
      for (const auto& coef : p.poly) {
        acc += coef * pw;
        pw *= n;
      }
      if (boost::multiprecision::denominator(acc) != 1)
        throw error("closed form: polynomial value is not an integer at n=" + std::to_string(n));
      return bigint(boost::multiprecision::numerator(acc));
    }
    case closed_form_part::form::scaled_pow2: {
      const long e = n - p.b;
      if (e < 0 || e % static_cast<long>(p.half) != 0)
        throw error("closed form: exponent (n-b)/k is not a whole number at n=" + std::to_string(n));
      bigint pw = bigint(1) << static_cast<unsigned>(e / static_cast<long>(p.half));
      const rational v = p.a * rational(pw) + p.c;
      if (boost::multiprecision::denominator(v) != 1)
        throw error("closed form: scaled exponential is not an integer at n=" + std::to_string(n));
      return bigint(boost::multiprecision::numerator(v));
    }
    case closed_form_part::form::binomial_sum: {
      // sum_{i<=m-2} C(n,i)  +  sum_{i>=0} C(n-2i-1, m-2)
      bigint acc = 0;
      for (long i = 0; i <= static_cast<long>(p.m) - 2; ++i) acc += binomial(n, i);
      for (long i = 0; n - 2 * i - 1 >= 0; ++i) acc += binomial(n - 2 * i - 1, p.m - 2);
      return acc;
    }
    case closed_form_part::form::fibonacci_combo: {
      bigint acc = p.lin * n + p.cst;
      const long j = n / 2;
      for (const auto& [coef, shift] : p.phi_terms)
        acc += coef * fibonacci(static_cast<unsigned>(j + shift));
      return acc;
    }
  }
  throw error("closed form: unknown part kind");
}

/// Evaluate a closed form at n; exceptional small values take precedence,
/// and indices below every defined range are an error.
inline bigint eval_closed_form(const closed_form& f, long n) {
  if (auto it = f.exceptions.find(n); it != f.exceptions.end()) return it->second;
  if (n < f.min_n) throw error(f.name + ": value undefined below n=" + std::to_string(f.min_n));
  const auto& part = f.parts.at(static_cast<std::size_t>(n % f.modulus));
  if (n < part.n0)
    throw error(f.name + ": no closed-form value at n=" + std::to_string(n));
  return eval_part(part, n);
}

inline int_sequence eval_closed_form_range(const closed_form& f, long from, long to) {
  int_sequence s;
  s.start = from;
  for (long n = from; n <= to; ++n) s.values.push_back(eval_closed_form(f, n));
  return s;
}

// --- builtin growth functions ---------------------------------------------

inline closed_form_part poly_part(unsigned residue, long n0, std::vector<rational> coeffs) {
  closed_form_part p;
  p.kind = closed_form_part::form::polynomial;
  p.residue = residue;
  p.n0 = n0;
  p.poly = std::move(coeffs);
  return p;
}

/// b<m> growth: binomial sums, one form for every n >= 1.
inline closed_form bm_closed_form(unsigned m) {
  if (m < 3) throw error("bm growth form requires m >= 3");
  closed_form f;
  f.name = "b" + std::to_string(m);
  f.modulus = 1;
  closed_form_part p;
  p.kind = closed_form_part::form::binomial_sum;
  p.residue = 0;
  p.n0 = 1;
  p.m = m;
  f.parts.push_back(std::move(p));
  return f;
}

inline closed_form builtin_closed_form(std::string_view name) {
  closed_form f;
  f.name = std::string(name);
  if (name == "a1") {
    // 3, 8, 14, then 23*2^((n-4)/2)-1 on even and 32*2^((n-5)/2)-1 on odd n
    f.modulus = 2;
    closed_form_part even, odd;
    even.kind = odd.kind = closed_form_part::form::scaled_pow2;
    even.residue = 0;
    even.n0 = 4;
    even.a = 23;
    even.b = 4;
    even.half = 2;
    even.c = -1;
    odd.residue = 1;
    odd.n0 = 5;
    odd.a = 32;
    odd.b = 5;
    odd.half = 2;
    odd.c = -1;
    f.parts = {std::move(even), std::move(odd)};
    f.exceptions = {{1, 3}, {2, 8}, {3, 14}};
    return f;
  }
  if (name == "a2") {
    f.modulus = 2;
    f.parts = {poly_part(0, 4, {8}), poly_part(1, 5, {9})};
    f.exceptions = {{1, 2}, {2, 4}, {3, 7}};
    return f;
  }
  if (name == "a3") {
    // even n: 2n; odd n: (5n-3)/2
    f.modulus = 2;
    f.parts = {poly_part(0, 2, {0, 2}), poly_part(1, 3, {rational(-3, 2), rational(5, 2)})};
    f.exceptions = {{1, 2}};
    return f;
  }
  if (name == "a4") {
    // even n: n^2 - (5/2)n + 6; odd n: (7/8)n^2 - n + 17/8
    f.modulus = 2;
    f.parts = {poly_part(0, 4, {6, rational(-5, 2), 1}),
               poly_part(1, 1, {rational(17, 8), -1, rational(7, 8)})};
    f.exceptions = {{2, 4}};
    return f;
  }
  if (name == "a6") {
    // F-combination per parity; also valid at n = 0 where it gives 0
    f.modulus = 2;
    f.min_n = 0;
    closed_form_part even, odd;
    even.kind = odd.kind = closed_form_part::form::fibonacci_combo;
    even.residue = 0;
    even.n0 = 0;
    even.phi_terms = {{1, 6}, {1, 4}};
    even.lin = -2;
    even.cst = -18;
    odd.residue = 1;
    odd.n0 = 1;
    odd.phi_terms = {{1, 6}, {2, 4}};
    odd.lin = -2;
    odd.cst = -18;
    f.parts = {std::move(even), std::move(odd)};
    return f;
  }
  if (name.size() > 1 && name[0] == 'b') {
    const long m = std::stol(std::string(name.substr(1)));
    if (m >= 3 && m <= 64) return bm_closed_form(static_cast<unsigned>(m));
  }
  throw error("unknown builtin closed form: " + std::string(name));
}

/// Builtin evaluator: the named growth forms plus plain "fibonacci".
inline bigint eval_builtin(std::string_view name, long n) {
  if (name == "fibonacci") {
    if (n < 0) throw error("fibonacci: negative index");
    return fibonacci(static_cast<unsigned>(n));
  }
  return eval_closed_form(builtin_closed_form(name), n);
}

// --- JSON ------------------------------------------------------------------

inline std::string rational_str(const rational& r) {
  const bigint num(boost::multiprecision::numerator(r));
  const bigint den(boost::multiprecision::denominator(r));
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline rational rational_from_str(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return rational(bigint(s));
  return rational(bigint(s.substr(0, slash)), bigint(s.substr(slash + 1)));
}

inline nlohmann::ordered_json to_json(const closed_form& f) {
  nlohmann::ordered_json j;
  j["name"] = f.name;
  j["k"] = f.modulus;
  j["min_n"] = f.min_n;
  auto parts = nlohmann::ordered_json::array();
  for (const auto& p : f.parts) {
    nlohmann::ordered_json jp;
    jp["residue"] = p.residue;
    jp["n0"] = p.n0;
    switch (p.kind) {
      case closed_form_part::form::polynomial: {
        jp["kind"] = "polynomial";
        auto coeffs = nlohmann::ordered_json::array();
        for (const auto& c : p.poly) coeffs.push_back(rational_str(c));
        jp["params"] = {{"coefficients", std::move(coeffs)}};
        break;
      }
      case closed_form_part::form::scaled_pow2:
        jp["kind"] = "scaled-pow2";
        jp["params"] = {{"a", rational_str(p.a)}, {"b", p.b}, {"k", p.half}, {"c", rational_str(p.c)}};
        break;
      case closed_form_part::form::binomial_sum:
        jp["kind"] = "binomial-sum";
        jp["params"] = {{"m", p.m}};
        break;
      case closed_form_part::form::fibonacci_combo: {
        jp["kind"] = "fibonacci";
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [coef, shift] : p.phi_terms)
          terms.push_back({{"coeff", coef.str()}, {"shift", shift}});
        jp["params"] = {{"terms", std::move(terms)}, {"linear", p.lin.str()}, {"constant", p.cst.str()}};
        break;
      }
    }
    parts.push_back(std::move(jp));
  }
  j["parts"] = std::move(parts);
  auto ex = nlohmann::ordered_json::object();
  for (const auto& [n, v] : f.exceptions) ex[std::to_string(n)] = v.str();
  j["exceptions"] = std::move(ex);
  return j;
}

inline closed_form closed_form_from_json(const nlohmann::json& j) {
  closed_form f;
  f.name = j.value("name", std::string{});
  f.modulus = j.at("k").get<unsigned>();
  f.min_n = j.value("min_n", 1L);
  for (const auto& jp : j.at("parts")) {
    closed_form_part p;
    p.residue = jp.at("residue").get<unsigned>();
    p.n0 = jp.at("n0").get<long>();
    const std::string kind = jp.at("kind").get<std::string>();
    const auto& params = jp.at("params");
    if (kind == "polynomial") {
      p.kind = closed_form_part::form::polynomial;
      for (const auto& c : params.at("coefficients"))
        p.poly.push_back(rational_from_str(c.get<std::string>()));
    } else if (kind == "scaled-pow2") {
      p.kind = closed_form_part::form::scaled_pow2;
      p.a = rational_from_str(params.at("a").get<std::string>());
      p.b = params.at("b").get<long>();
      p.half = params.at("k").get<unsigned>();
      p.c = rational_from_str(params.at("c").get<std::string>());
    } else if (kind == "binomial-sum") {
      p.kind = closed_form_part::form::binomial_sum;
      p.m = params.at("m").get<unsigned>();
    } else if (kind == "fibonacci") {
      p.kind = closed_form_part::form::fibonacci_combo;
      for (const auto& t : params.at("terms"))
        p.phi_terms.emplace_back(bigint(t.at("coeff").get<std::string>()),
                                 t.at("shift").get<long>());
      p.lin = bigint(params.at("linear").get<std::string>());
      p.cst = bigint(params.at("constant").get<std::string>());
    } else {
      throw error("closed form json: unknown kind " + kind);
    }
    f.parts.push_back(std::move(p));
  }
  if (j.contains("exceptions"))
    for (const auto& [key, val] : j.at("exceptions").items())
      f.exceptions[std::stol(key)] = bigint(val.get<std::string>());
  return f;
}

}  // namespace mealy
