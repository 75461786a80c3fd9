#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mealy/words.hpp"

namespace mealy {

// ---------------------------------------------------------------------------
// Word templates.  A template is a word over named generators whose
// exponents are integer expressions in named parameters, e.g.
//
//   f0 f1^(2*p+1) f0
//   f1^(p*2^(k+1)) f0 prod(i = k .. 1 : f1^(2^i-1) f0)
//
// "1" denotes the empty word.  prod(...) concatenates its body for each
// value of the loop variable, inclusive on both ends, counting down when
// the first bound exceeds the second.
// ---------------------------------------------------------------------------

using param_env = std::map<std::string, long>;

namespace tmpl {

struct expr {
  enum class op { constant, param, add, sub, mul, pow, neg };
  op kind = op::constant;
  long value = 0;
  std::string name;
  std::unique_ptr<expr> lhs, rhs;

  long eval(const param_env& env) const {
    switch (kind) {
      case op::constant: return value;
      case op::param: {
        auto it = env.find(name);
        if (it == env.end()) throw error("template: unbound parameter '" + name + "'");
        return it->second;
      }
      case op::add: return lhs->eval(env) + rhs->eval(env);
      case op::sub: return lhs->eval(env) - rhs->eval(env);
      case op::mul: return lhs->eval(env) * rhs->eval(env);
      case op::neg: return -lhs->eval(env);
      case op::pow: {
        const long b = lhs->eval(env);
        const long e = rhs->eval(env);
        if (e < 0) throw error("template: negative exponent in expression");
        long r = 1;
        for (long i = 0; i < e; ++i) {
          r *= b;
          if (r > (1L << 40) || r < -(1L << 40)) throw error("template: expression overflow");
        }
        return r;
      }
    }
    throw error("template: bad expression node");
  }
};

using expr_ptr = std::unique_ptr<expr>;

struct item;

struct sequence {
  std::vector<item> items;
};

struct item {
  enum class kind { gen, group, repeat };
  kind k = kind::gen;
  std::uint32_t gen = 0;          // resolved generator index
  sequence body;                  // group / repeat
  expr_ptr exponent;              // optional, defaults to 1
  std::string loop_var;           // repeat
  expr_ptr loop_from, loop_to;    // repeat bounds
  bool loop_down = false;         // 'downto': descending, empty if from < to
};

class parser {
 public:
  parser(std::string_view src, const std::vector<std::string>& generators)
      : src_(src), gens_(generators) {}

  sequence parse() {
    sequence s = parse_sequence();
    skip();
    if (pos_ != src_.size()) throw error("template: trailing input in '" + std::string(src_) + "'");
    return s;
  }

 private:
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) throw error(std::string("template: expected '") + c + "'");
  }

  std::optional<std::string> ident() {
    skip();
    if (pos_ >= src_.size()) return std::nullopt;
    if (!std::isalpha(static_cast<unsigned char>(src_[pos_])) && src_[pos_] != '_')
      return std::nullopt;
    std::string t;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      t.push_back(src_[pos_++]);
    return t;
  }

  std::optional<long> number() {
    skip();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      return std::nullopt;
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      v = v * 10 + (src_[pos_++] - '0');
    return v;
  }

  expr_ptr make(expr::op k, expr_ptr l = nullptr, expr_ptr r = nullptr) {
    auto e = std::make_unique<expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  expr_ptr parse_expr() {  // additive
    expr_ptr e = parse_term();
    for (;;) {
      if (eat('+'))
        e = make(expr::op::add, std::move(e), parse_term());
      else if (eat('-'))
        e = make(expr::op::sub, std::move(e), parse_term());
      else
        return e;
    }
  }

  expr_ptr parse_term() {
    expr_ptr e = parse_unary();
    while (eat('*')) e = make(expr::op::mul, std::move(e), parse_unary());
    return e;
  }

  expr_ptr parse_unary() {
    if (eat('-')) return make(expr::op::neg, parse_unary());
    return parse_power();
  }

  expr_ptr parse_power() {
    expr_ptr base = parse_atom();
    if (eat('^')) return make(expr::op::pow, std::move(base), parse_unary());
    return base;
  }

  expr_ptr parse_atom() {
    if (eat('(')) {
      expr_ptr e = parse_expr();
      expect(')');
      return e;
    }
    if (auto v = number()) {
      auto e = make(expr::op::constant);
      e->value = *v;
      return e;
    }
    if (auto id = ident()) {
      auto e = make(expr::op::param);
      e->name = *id;
      return e;
    }
    throw error("template: expected an expression");
  }

  std::optional<expr_ptr> maybe_exponent() {
    if (!eat('^')) return std::nullopt;
    if (eat('(')) {
      expr_ptr e = parse_expr();
      expect(')');
      return e;
    }
    // a bare number or parameter
    if (auto v = number()) {
      auto e = make(expr::op::constant);
      e->value = *v;
      return e;
    }
    if (auto id = ident()) {
      auto e = make(expr::op::param);
      e->name = *id;
      return e;
    }
    throw error("template: expected an exponent");
  }

  sequence parse_sequence() {
    sequence s;
    for (;;) {
      skip();
      if (pos_ >= src_.size() || src_[pos_] == ')' || src_[pos_] == ':') return s;
      s.items.push_back(parse_item());
    }
  }

  item parse_item() {
    skip();
    if (eat('(')) {
      item it;
      it.k = item::kind::group;
      it.body = parse_sequence();
      expect(')');
      if (auto e = maybe_exponent()) it.exponent = std::move(*e);
      return it;
    }
    if (pos_ < src_.size() && src_[pos_] == '1') {
      ++pos_;
      item it;
      it.k = item::kind::group;  // empty body: the identity
      if (auto e = maybe_exponent()) it.exponent = std::move(*e);
      return it;
    }
    auto id = ident();
    if (!id) throw error("template: expected a generator, '1', '(' or prod(...)");
    if (*id == "prod") {
      // prod(i = a .. b : body)     ascending, empty when a > b
      // prod(i = a downto b : body) descending, empty when a < b
      expect('(');
      item it;
      it.k = item::kind::repeat;
      auto var = ident();
      if (!var) throw error("template: prod needs a loop variable");
      it.loop_var = *var;
      expect('=');
      it.loop_from = parse_expr();
      if (peek('.')) {
        expect('.');
        expect('.');
      } else {
        auto kw = ident();
        if (!kw || *kw != "downto") throw error("template: expected '..' or 'downto' in prod");
        it.loop_down = true;
      }
      it.loop_to = parse_expr();
      expect(':');
      it.body = parse_sequence();
      expect(')');
      if (auto e = maybe_exponent()) it.exponent = std::move(*e);
      return it;
    }
    item it;
    it.k = item::kind::gen;
    bool found = false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == *id) {
        it.gen = static_cast<std::uint32_t>(i);
        found = true;
        break;
      }
    if (!found) throw error("template: unknown generator '" + *id + "'");
    if (auto e = maybe_exponent()) it.exponent = std::move(*e);
    return it;
  }

  std::string_view src_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
};

inline void instantiate(const sequence& s, const param_env& env, generator_word& out,
                        std::size_t length_cap);

inline void instantiate_item(const item& it, const param_env& env, generator_word& out,
                             std::size_t length_cap) {
  long reps = 1;
  if (it.exponent) {
    reps = it.exponent->eval(env);
    if (reps < 0) throw error("template: negative word exponent");
  }
  for (long r = 0; r < reps; ++r) {
    switch (it.k) {
      case item::kind::gen:
        out.push_back(it.gen);
        if (out.size() > length_cap) throw error("template: instantiated word too long");
        break;
      case item::kind::group:
        instantiate(it.body, env, out, length_cap);
        break;
      case item::kind::repeat: {
        const long from = it.loop_from->eval(env);
        const long to = it.loop_to->eval(env);
        param_env inner = env;
        if (it.loop_down) {
          for (long v = from; v >= to; --v) {
            inner[it.loop_var] = v;
            instantiate(it.body, inner, out, length_cap);
          }
        } else {
          for (long v = from; v <= to; ++v) {
            inner[it.loop_var] = v;
            instantiate(it.body, inner, out, length_cap);
          }
        }
        break;
      }
    }
  }
}

inline void instantiate(const sequence& s, const param_env& env, generator_word& out,
                        std::size_t length_cap) {
  for (const auto& it : s.items) instantiate_item(it, env, out, length_cap);
}

}  // namespace tmpl

/// A parsed word template bound to a generator name list.
class word_template {
 public:
  word_template() = default;
  word_template(std::string source, const std::vector<std::string>& generators)
      : source_(std::move(source)) {
    tmpl::parser p(source_, generators);
    seq_ = p.parse();
  }

  generator_word instantiate(const param_env& env, std::size_t length_cap = 1u << 20) const {
    generator_word w;
    tmpl::instantiate(seq_, env, w, length_cap);
    return w;
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  tmpl::sequence seq_;
};

struct param_range {
  std::string name;
  long lo = 0;
  long hi = 0;
};

struct relation {
  std::string label;
  std::vector<param_range> params;
  word_template lhs, rhs;
};

struct relation_set {
  std::string name;
  std::vector<std::string> generators;
  std::vector<relation> relations;
};

inline relation make_relation(const relation_set& rs, std::string label, std::string lhs,
                              std::string rhs, std::vector<param_range> params = {}) {
  relation r;
  r.label = std::move(label);
  r.params = std::move(params);
  r.lhs = word_template(std::move(lhs), rs.generators);
  r.rhs = word_template(std::move(rhs), rs.generators);
  return r;
}

struct relation_failure {
  std::string label;
  param_env env;
  std::string lhs, rhs;  // instantiated sources for the report
};

struct relation_report {
  std::size_t instances_checked = 0;
  std::vector<relation_failure> failures;
  bool all_hold() const { return failures.empty(); }
};

/// Check every relation instance over its (pbound-capped) parameter box via
/// transformation equality.  generator_map, when given, sends template
/// generator i to an automaton state.
inline relation_report check_relations(const automaton& a, const relation_set& rels,
                                       long pbound = 8, word_machine_options wopts = {},
                                       const std::vector<state_t>* generator_map = nullptr) {
  if (!generator_map && rels.generators.size() > a.n)
    throw error("check_relations: more template generators than states");
  relation_report rep;
  for (const auto& rel : rels.relations) {
    std::vector<param_env> envs{param_env{}};
    for (const auto& pr : rel.params) {
      const long hi = std::min(pr.hi, pbound);
      std::vector<param_env> grown;
      for (const auto& env : envs)
        for (long v = pr.lo; v <= hi; ++v) {
          param_env e = env;
          e[pr.name] = v;
          grown.push_back(std::move(e));
        }
      envs = std::move(grown);
    }
    for (const auto& env : envs) {
      generator_word lhs = rel.lhs.instantiate(env);
      generator_word rhs = rel.rhs.instantiate(env);
      if (generator_map) {
        for (auto& g : lhs) g = (*generator_map).at(g);
        for (auto& g : rhs) g = (*generator_map).at(g);
      }
      ++rep.instances_checked;
      if (!words_equal(a, lhs, rhs, wopts))
        rep.failures.push_back({rel.label, env, rel.lhs.source(), rel.rhs.source()});
    }
  }
  return rep;
}

inline nlohmann::ordered_json to_json(const relation_set& rs) {
  nlohmann::ordered_json j;
  j["name"] = rs.name;
  j["generators"] = rs.generators;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs.relations) {
    nlohmann::ordered_json jr;
    jr["label"] = r.label;
    auto params = nlohmann::ordered_json::array();
    for (const auto& p : r.params)
      params.push_back({{"name", p.name}, {"min", p.lo}, {"max", p.hi}});
    jr["params"] = std::move(params);
    jr["lhs"] = r.lhs.source();
    jr["rhs"] = r.rhs.source();
    arr.push_back(std::move(jr));
  }
  j["relations"] = std::move(arr);
  return j;
}

inline relation_set relation_set_from_json(const nlohmann::json& j) {
  relation_set rs;
  rs.name = j.value("name", std::string{});
  rs.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& jr : j.at("relations")) {
    std::vector<param_range> params;
    if (jr.contains("params"))
      for (const auto& jp : jr["params"])
        params.push_back({jp.at("name").get<std::string>(), jp.at("min").get<long>(),
                          jp.at("max").get<long>()});
    rs.relations.push_back(make_relation(rs, jr.value("label", std::string{}),
                                         jr.at("lhs").get<std::string>(),
                                         jr.at("rhs").get<std::string>(), std::move(params)));
  }
  return rs;
}

}  // namespace mealy
