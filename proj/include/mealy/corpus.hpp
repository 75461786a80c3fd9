#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/closed_forms.hpp"
#include "mealy/normal_forms.hpp"
#include "mealy/power_series.hpp"
#include "mealy/relations.hpp"

namespace mealy {

/// A bundled study machine: automaton, its expected growth form, defining
/// relations, and (when known) a normal-form grammar id.
struct corpus_entry {
  std::string name;
  automaton aut;
  closed_form expected;
  relation_set relations;
  std::optional<std::string> grammar;  ///< id accepted by make_normal_form_grammar
};

// --- the fixed machines -----------------------------------------------------
//
// All are given by their unrolled forms f_q = (sections...)(outputs...).

inline automaton builtin_a1() {
  // f0 = (f0,f1)(x1,x1)   f1 = (f0,f2)(x1,x1)   f2 = (f1,f1)(x0,x0)
  return make_automaton("a1", 2,
                        {{{0, 1}, {1, 1}},
                         {{0, 1}, {2, 1}},
                         {{1, 0}, {1, 0}}});
}

inline automaton builtin_a2() {
  // f0 = (f0,f0,f0,f0)(x1,x1,x0,x0)   f1 = (f0,f1,f1,f1)(x0,x2,x0,x1)
  return make_automaton("a2", 4,
                        {{{0, 1}, {0, 1}, {0, 0}, {0, 0}},
                         {{0, 0}, {1, 2}, {1, 0}, {1, 1}}});
}

inline automaton builtin_a3() {
  // f0 = (f0,f0,f0,f0)(x1,x2,x2,x2)   f1 = (f0,f1,f1,f1)(x3,x0,x2,x2)
  return make_automaton("a3", 4,
                        {{{0, 1}, {0, 2}, {0, 2}, {0, 2}},
                         {{0, 3}, {1, 0}, {1, 2}, {1, 2}}});
}

inline automaton builtin_a4() {
  // f0 = (f0,f0,f0,f0)(x0,x0,x1,x1)   f1 = (f0,f1,f1,f1)(x2,x3,x0,x1)
  return make_automaton("a4", 4,
                        {{{0, 0}, {0, 0}, {0, 1}, {0, 1}},
                         {{0, 2}, {1, 3}, {1, 0}, {1, 1}}});
}

inline automaton builtin_a6() {
  // f0 = (f0,f0)(x1,x0)   f1 = (f1,f2)(x0,x1)   f2 = (f1,f2)(x0,x0)
  return make_automaton("a6", 2,
                        {{{0, 1}, {0, 0}},
                         {{1, 0}, {2, 1}},
                         {{1, 0}, {2, 0}}});
}

/// Two-state machine over m letters, m >= 3: f0 transposes x0 and x1 with
/// its section at x2 equal to f1; f1 shifts every letter up by one (fixing
/// the last) with its section at x0 equal to f0.
inline automaton build_bm_automaton(unsigned m) {
  if (m < 3) throw error("bm requires m >= 3");
  automaton a(m, 2, "b" + std::to_string(m));
  for (letter_t x = 0; x < m; ++x) {
    a.step(0, x) = x == 2 ? 1 : 0;
    a.output(0, x) = x == 0 ? 1 : (x == 1 ? 0 : x);
    a.step(1, x) = x == 0 ? 0 : 1;
    a.output(1, x) = x + 1u < m ? x + 1 : m - 1;
  }
  return a;
}

// --- defining relations ------------------------------------------------------

inline relation_set builtin_relations(std::string_view name) {
  relation_set rs;
  rs.name = std::string(name);
  auto rel = [&](std::string label, std::string lhs, std::string rhs,
                 std::vector<param_range> params = {}) {
    rs.relations.push_back(make_relation(rs, std::move(label), std::move(lhs), std::move(rhs),
                                         std::move(params)));
  };

  if (name == "a1") {
    rs.generators = {"f0", "f1", "f2"};
    rel("mix-absorb", "f1 f2", "f0 f2");
    rel("sq1-left.0", "f1^2 f0", "f1 f0 f2");
    rel("sq1-left.1", "f1^2 f1", "f1 f0 f2");
    rel("sq0-absorb", "f0^2 f1", "f0^2");
    rel("f2-head.a", "f2 f0 f1", "f2 f0^2");
    rel("f2-head.b0", "f2^2 f0", "f2 f0^2");
    rel("f2-head.b1", "f2^2 f1", "f2 f0^2");
    rel("f2-head.b2", "f2^2 f2", "f2 f0^2");
    rel("f0-quartic", "f0^4", "f0^3");
    rel("f0-cubic-tail", "f0^3 f2", "f0^3");
    rel("braid", "f0 f2 f0^2", "f0 f1 f0 f2");
    rel("tail-drop", "f1 f0 f2 f0", "f1 f0 f2");
    rel("f2-cubic", "f2 f0^3", "f2 f0^2");
    return rs;
  }
  if (name == "a2") {
    rs.generators = {"f0", "f1"};
    rel("sq0-absorb.0", "f0^2 f0", "f0^2");
    rel("sq0-absorb.1", "f0^2 f1", "f0^2");
    rel("mid-sq.0", "f0 f1^2 f0", "f0^2");
    rel("mid-sq.1", "f0 f1^2 f1", "f0^2");
    rel("head-swap", "f1^2 f0^2", "f0 f1 f0^2");
    rel("quartic.a", "f1 f0 f1 f0^2", "f1^4");
    rel("quartic.b", "f1^4", "f1^3 f0");
    rel("period", "(f1 f0)^4", "(f1 f0)^2");
    return rs;
  }
  if (name == "a3") {
    rs.generators = {"f0", "f1"};
    rel("sq0-absorb.0", "f0^2 f0", "f0^2");
    rel("sq0-absorb.1", "f0^2 f1", "f0^2");
    rel("sq0-left", "f1 f0^2", "f0^2");
    rel("sandwich", "f0 f1 f0", "f0");
    rel("sandwich-sq", "f0 f1^2 f0", "f0^2");
    rel("cube-shift", "f1^3 f0 f1", "f1 f0 f1^3");
    return rs;
  }
  if (name == "a4") {
    rs.generators = {"f0", "f1"};
    rel("sq0-absorb.0", "f0^2 f0", "f0^2");
    rel("sq0-absorb.1", "f0^2 f1", "f0^2");
    rel("mid-drop.0", "f1 f0 f1^2 f0", "f1 f0 f0");
    rel("mid-drop.1", "f1 f0 f1^2 f1", "f1 f0 f1");
    rel("odd-family", "f0 f1^(2*p+1) f0", "f0 f1 f0", {{"p", 1, 64}});
    return rs;
  }
  if (name == "a6") {
    rs.generators = {"f0", "f1", "f2"};
    rel("involution", "f0^2", "1");
    rel("f2-swallow.l", "f2 f1", "f2");
    rel("f2-swallow.r", "f1 f2", "f2");
    rel("f2-idem", "f2^2", "f2");
    rel("f1-idem", "f1^2", "f1");
    rel("long-mix", "f2 f0 f1 f0 f2", "f1 f0 f1 f0 f2");
    return rs;
  }
  if (name == "a5") {
    // the nested family: f0 f1^(2^k-1) absorbs on the left of
    // f1^(p 2^(k+1)) f0 (f1^(2^k-1) f0)(f1^(2^(k-1)-1) f0)...(f1 f0)
    rs.generators = {"f0", "f1"};
    rel("nested-absorb",
        "f0 f1^(2^k-1) f1^(p*2^(k+1)) f0 prod(i = k downto 1 : f1^(2^i-1) f0)",
        "f1^(p*2^(k+1)) f0 prod(i = k downto 1 : f1^(2^i-1) f0)",
        {{"k", 0, 4}, {"p", 0, 1}});
    return rs;
  }
  if (name.size() > 1 && name[0] == 'b') {
    const long m = std::stol(std::string(name.substr(1)));
    rs.generators = {"f0", "f1"};
    if (m == 3) {
      rel("cubic", "f1^3", "f0 f1^2");
      rel("middle", "f1 f0 f1", "f0^2 f1");
      return rs;
    }
    if (m == 4) {
      rel("quartic", "f1^4", "f1 f0 f1^2");
      rel("pump", "f1 f0^p f1 f0 f1", "f1 f0^(p+2) f1", {{"p", 0, 64}});
      return rs;
    }
    if (m >= 5) {
      // product prefixes of lengths m-4 and m-3; written out per m
      std::string prefix1, prefix2;
      std::vector<param_range> params1, params2;
      for (long i = 1; i <= m - 4; ++i) {
        prefix1 += "f1 f0^p" + std::to_string(i) + " ";
        params1.push_back({"p" + std::to_string(i), 0, 64});
      }
      for (long i = 1; i <= m - 3; ++i) {
        prefix2 += "f1 f0^p" + std::to_string(i) + " ";
        params2.push_back({"p" + std::to_string(i), 0, 64});
      }
      rel("quartic-family", prefix1 + "f1^4", prefix1 + "f1 f0 f1^2", std::move(params1));
      rel("middle-family", prefix2 + "f1 f0 f1", prefix2 + "f0^2 f1", std::move(params2));
      return rs;
    }
  }
  throw error("unknown relation fixture: " + std::string(name));
}

// --- normal-form grammars ----------------------------------------------------

/// Grammar ids: "a1", "a4", "b<m>", "a5".  The grammars are generated for a
/// target length bound because some of them have one template per block
/// depth k.
inline normal_form_grammar make_normal_form_grammar(std::string_view id, unsigned nmax) {
  normal_form_grammar g;
  g.name = std::string(id);

  if (id == "a4") {
    // f0 f1^(2p1) (f0 f1)^p2 s'   with p1 >= 1, p2 >= 0, minus (1, 0, s'=1)
    // f1^p1 (f0 f1)^p2 s'         with p1 >= 0, p2 >= 1
    // f1^p1 s'                    with p1 >= 0, s' in {f1, f0, f0^2}
    g.generators = {"f0", "f1"};
    const std::vector<std::string> tails = {"", "f1", "f0", "f0^2"};
    for (const auto& tail : tails) {
      std::vector<param_env> except;
      if (tail.empty()) except.push_back({{"p1", 1}, {"p2", 0}});
      g.templates.push_back(make_nf_template(g, "f0 f1^(2*p1) (f0 f1)^p2 " + tail,
                                             {"p1", "p2"}, {1, 0}, std::move(except)));
      g.templates.push_back(
          make_nf_template(g, "f1^p1 (f0 f1)^p2 " + tail, {"p1", "p2"}, {0, 1}));
      if (!tail.empty())
        g.templates.push_back(make_nf_template(g, "f1^p1 " + tail, {"p1"}, {0}));
    }
    return g;
  }

  if (id == "a1") {
    // s' (f0 f2)^p1 (f1 f0)^p2 ... (f0 f2)^p_{2k-1} (f1 f0)^p_{2k} s''
    // k >= 1; the outer exponents may vanish, the inner ones are positive
    g.generators = {"f0", "f1", "f2"};
    const std::vector<std::string> heads = {"", "f0", "f2"};
    const std::vector<std::string> tails = {"",      "f0",        "f1",
                                            "f1^2",  "f1 f0^3",   "f0 f2^2",
                                            "f0 f2 f1 f0 f2"};
    for (unsigned k = 1; 4 * k - 4 <= nmax; ++k) {
      std::string middle;
      std::vector<std::string> params;
      std::vector<long> lower;
      for (unsigned i = 1; i <= 2 * k; ++i) {
        const std::string p = "p" + std::to_string(i);
        middle += (i % 2 ? "(f0 f2)^" : "(f1 f0)^") + p + " ";
        params.push_back(p);
        lower.push_back(i == 1 || i == 2 * k ? 0 : 1);
      }
      for (const auto& head : heads)
        for (const auto& tail : tails)
          g.templates.push_back(
              make_nf_template(g, head + " " + middle + tail, params, lower));
    }
    return g;
  }

  if (id == "a5") {
    // f1^p0 prod(j = 1..k : f0 f1^(2^(k-j) pj + 2^(k-j) - 1)), last block
    // exponent p_k; one template per depth k; the empty word is the monoid
    // identity
    g.generators = {"f0", "f1"};
    g.monoid = true;
    for (unsigned k = 0; (1u << k) - 1 <= nmax; ++k) {
      std::string src = "f1^p0";
      std::vector<std::string> params = {"p0"};
      std::vector<long> lower = {0};
      for (unsigned j = 1; j <= k; ++j) {
        const std::string p = "p" + std::to_string(j);
        if (j < k)
          src += " f0 f1^(2^" + std::to_string(k - j) + "*" + p + "+2^" +
                 std::to_string(k - j) + "-1)";
        else
          src += " f0 f1^" + p;
        params.push_back(p);
        lower.push_back(0);
      }
      g.templates.push_back(make_nf_template(g, src, params, lower));
    }
    return g;
  }

  if (id.size() > 1 && id[0] == 'b') {
    const long m = std::stol(std::string(id.substr(1)));
    if (m < 3) throw error("bm grammar requires m >= 3");
    // f0^p1 f1 f0^p2 ... f1 f0^pk for 1 <= k <= m-1, plus the long shape
    // with m-1 f1's whose next-to-last block has an even exponent
    g.generators = {"f0", "f1"};
    for (long k = 1; k <= m - 1; ++k) {
      std::string src;
      std::vector<std::string> params;
      std::vector<long> lower;
      for (long i = 1; i <= k; ++i) {
        if (i > 1) src += " f1 ";
        const std::string p = "p" + std::to_string(i);
        src += "f0^" + p;
        params.push_back(p);
        lower.push_back(0);
      }
      g.templates.push_back(make_nf_template(g, src, params, lower));
    }
    {
      std::string src;
      std::vector<std::string> params;
      std::vector<long> lower;
      for (long i = 1; i <= m; ++i) {
        if (i > 1) src += " f1 ";
        const std::string p = "p" + std::to_string(i);
        src += i == m - 1 ? "f0^(2*" + p + ")" : "f0^" + p;
        params.push_back(p);
        lower.push_back(0);
      }
      g.templates.push_back(make_nf_template(g, src, params, lower));
    }
    return g;
  }

  throw error("unknown normal-form grammar: " + std::string(id));
}

// --- rational growth series for a6 -------------------------------------------

struct rational_series_spec {
  std::vector<bigint> numerator;
  std::vector<bigint> denominator;
};

/// Growth series of the a6 automaton combined into one fraction:
///   ( (2X - 1)(1 - X^2 - X^4) + 1 + X + X^3 ) / ( (1 - X^2 - X^4)(1 - X)^2 )
inline rational_series_spec a6_automaton_series() {
  const std::vector<bigint> core = {1, 0, -1, 0, -1};  // 1 - X^2 - X^4
  const std::vector<bigint> one_minus_x = {1, -1};
  rational_series_spec s;
  s.numerator = poly_add(poly_mul({-1, 2}, core), {1, 1, 0, 1});
  s.denominator = poly_mul(core, poly_mul(one_minus_x, one_minus_x));
  return s;
}

/// Growth series of the semigroup of a6; same denominator, numerator
///   X(1 - X^2 - X^4) + 1 + X + X^3.
inline rational_series_spec a6_semigroup_series() {
  const std::vector<bigint> core = {1, 0, -1, 0, -1};
  const std::vector<bigint> one_minus_x = {1, -1};
  rational_series_spec s;
  s.numerator = poly_add(poly_mul({0, 1}, core), {1, 1, 0, 1});
  s.denominator = poly_mul(core, poly_mul(one_minus_x, one_minus_x));
  return s;
}

/// The growth prefix the 3-state/2-letter search uses to recover the
/// intermediate-growth machine, taken from the nested series expansion.
inline std::vector<std::uint64_t> a5_search_prefix(unsigned len = 10) {
  const power_series s = nested_intermediate_series(len);
  std::vector<std::uint64_t> prefix;
  for (unsigned n = 1; n <= len; ++n)
    prefix.push_back(boost::multiprecision::numerator(s.c[n]).convert_to<std::uint64_t>());
  return prefix;
}

// --- entries -----------------------------------------------------------------

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"a1", "a2", "a3", "a4", "a6"};
  return names;
}

inline corpus_entry get_builtin(std::string_view name) {
  corpus_entry e;
  e.name = std::string(name);
  if (name == "a1") {
    e.aut = builtin_a1();
    e.grammar = "a1";
  } else if (name == "a2") {
    e.aut = builtin_a2();
  } else if (name == "a3") {
    e.aut = builtin_a3();
  } else if (name == "a4") {
    e.aut = builtin_a4();
    e.grammar = "a4";
  } else if (name == "a6") {
    e.aut = builtin_a6();
  } else {
    throw error("unknown builtin automaton: " + std::string(name));
  }
  e.expected = builtin_closed_form(name);
  e.relations = builtin_relations(name);
  return e;
}

inline corpus_entry build_bm(unsigned m) {
  corpus_entry e;
  e.name = "b" + std::to_string(m);
  e.aut = build_bm_automaton(m);
  e.expected = bm_closed_form(m);
  e.relations = builtin_relations(e.name);
  e.grammar = e.name;
  return e;
}

/// Builtins plus the default b-family members, the set every cross-check
/// runs over.
inline std::vector<corpus_entry> corpus_entries() {
  std::vector<corpus_entry> all;
  for (const auto& n : builtin_names()) all.push_back(get_builtin(n));
  for (unsigned m = 3; m <= 5; ++m) all.push_back(build_bm(m));
  return all;
}

/// Resolve a name like "a2", "b4" to a corpus entry.
inline corpus_entry corpus_lookup(std::string_view name) {
  for (const auto& n : builtin_names())
    if (n == name) return get_builtin(name);
  if (name.size() > 1 && name[0] == 'b') {
    const long m = std::stol(std::string(name.substr(1)));
    if (m >= 3 && m <= 64) return build_bm(static_cast<unsigned>(m));
  }
  throw error("unknown corpus entry: " + std::string(name));
}

}  // namespace mealy
