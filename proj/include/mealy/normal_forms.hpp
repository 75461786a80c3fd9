#pragma once

#include <set>
#include <string>
#include <vector>

#include "mealy/relations.hpp"
#include "mealy/sequence.hpp"

namespace mealy {

/// One parameterized word shape of a normal-form description.  Parameters
/// enumerate from their lower bounds; instantiated word length must be
/// non-decreasing in every parameter, which lets the enumeration prune.
struct normal_form_template {
  word_template words;
  std::vector<std::string> params;
  std::vector<long> lower;
  std::vector<param_env> exceptions;  ///< excluded exact assignments
};

struct normal_form_grammar {
  std::string name;
  std::vector<std::string> generators;
  std::vector<normal_form_template> templates;
  bool monoid = false;  ///< the empty word is a legal normal form (length 0)
};

inline normal_form_template make_nf_template(const normal_form_grammar& g, std::string src,
                                             std::vector<std::string> params,
                                             std::vector<long> lower,
                                             std::vector<param_env> exceptions = {}) {
  normal_form_template t;
  t.words = word_template(std::move(src), g.generators);
  t.params = std::move(params);
  t.lower = std::move(lower);
  t.exceptions = std::move(exceptions);
  return t;
}

namespace detail {

inline bool excluded(const normal_form_template& t, const param_env& env) {
  for (const auto& ex : t.exceptions) {
    bool all = true;
    for (const auto& [k, v] : ex) {
      auto it = env.find(k);
      if (it == env.end() || it->second != v) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline std::string word_key(const generator_word& w) {
  std::string k;
  k.reserve(w.size());
  for (auto g : w) k.push_back(static_cast<char>('a' + g));
  return k;
}

inline void enumerate_template(const normal_form_template& t, unsigned nmax,
                               std::vector<std::set<std::string>>& by_length) {
  param_env env;
  // depth-first over parameter values; prune as soon as the word with all
  // remaining parameters at their lower bounds already exceeds nmax
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == t.params.size()) {
      if (excluded(t, env)) return;
      try {
        const generator_word w = t.words.instantiate(env, nmax + 1);
        if (w.size() <= nmax) by_length[w.size()].insert(word_key(w));
      } catch (const error&) {
      }
      return;
    }
    for (long v = t.lower[idx];; ++v) {
      env[t.params[idx]] = v;
      // minimal completion: all later parameters at their lower bounds
      param_env probe = env;
      for (std::size_t j = idx + 1; j < t.params.size(); ++j) probe[t.params[j]] = t.lower[j];
      generator_word w;
      try {
        w = t.words.instantiate(probe, nmax + 1);
      } catch (const error&) {
        env.erase(t.params[idx]);
        return;  // word already longer than nmax; larger v only grows it
      }
      if (w.size() > nmax) {
        env.erase(t.params[idx]);
        return;
      }
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// Count the distinct words a grammar generates at each length in
/// [0, nmax]; duplicates across templates collapse.  Index 0 is nonzero
/// only for monoid grammars.
inline int_sequence enumerate_normal_forms(const normal_form_grammar& g, unsigned nmax) {
  std::vector<std::set<std::string>> by_length(nmax + 1);
  for (const auto& t : g.templates) detail::enumerate_template(t, nmax, by_length);
  if (!g.monoid) by_length[0].clear();
  int_sequence counts;
  counts.start = 0;
  for (unsigned n = 0; n <= nmax; ++n) counts.values.push_back(by_length[n].size());
  return counts;
}

}  // namespace mealy
