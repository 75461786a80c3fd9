#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/minimize.hpp"

namespace mealy {

/// Canonical store of the distinct automatic transformations discovered so
/// far.  Element 0 is always the identity (the seed of the recursion).
/// Every element is described coinductively by its letter transformation
/// (sigma row) and its m section ids, and any two registered ids are
/// behaviorally distinct.
struct element_registry {
  std::size_t m = 0;
  std::vector<letter_t> sigma;          ///< m letters per element
  std::vector<std::uint32_t> sections;  ///< m ids per element
  std::vector<std::uint32_t> min_length;
  std::vector<std::uint32_t> generator_ids;  ///< per automaton state

  static constexpr std::uint32_t identity_id = 0;

  std::size_t size() const { return min_length.size(); }

  std::span<const letter_t> sigma_row(std::uint32_t id) const {
    return {sigma.data() + std::size_t{id} * m, m};
  }
  std::span<const std::uint32_t> section_row(std::uint32_t id) const {
    return {sections.data() + std::size_t{id} * m, m};
  }
};

/// delta(n), spherical(n) and cumulative(n) for n = 0..levels().  Row 0 is
/// the seed row; printed exports start at n = 1.
struct growth_tables {
  std::vector<std::uint64_t> delta;
  std::vector<std::uint64_t> spherical;
  std::vector<std::uint64_t> cumulative;
  bool truncated = false;
  unsigned truncated_at = 0;  ///< first level that was not computed

  unsigned levels() const { return static_cast<unsigned>(delta.size()) - 1; }
};

struct enumerate_options {
  std::size_t element_cap = 1'000'000;
  /// Monoid semantics: the identity counts as an element of length 0.
  /// Otherwise it is excluded until it is realized by a state or by a
  /// nonempty product, and then counts from that realization length.
  bool monoid_mode = false;
  /// Called after each completed level; returning false abandons the
  /// remaining levels (the tables keep the levels computed so far).
  std::function<bool(unsigned level, const growth_tables&)> level_probe;
};

/// Result of the level-by-level enumeration, with enough context to
/// resolve further words against the registry.
struct semigroup_enumeration {
  automaton source;
  element_registry registry;
  growth_tables tables;
  std::vector<std::vector<std::uint32_t>> level_sets;  ///< distinct ids per level
  std::optional<unsigned> identity_realized_at;
  /// (generator << 32 | element id) -> id of the composite, for every
  /// candidate pair processed so far.
  std::unordered_map<std::uint64_t, std::uint32_t> product_memo;
  bool monoid_mode = false;
};

namespace detail {

inline std::uint64_t pair_key(std::uint32_t gen, std::uint32_t id) {
  return (std::uint64_t{gen} << 32) | id;
}

}  // namespace detail

/// Level-by-level enumeration of the transformations representable by
/// words of each length: S_n = { g.h : g generator, h in S_{n-1} } with
/// S_0 = { identity }.  Candidate output rows compose the generator's
/// sigma after the parent's; candidate sections pair the generator's
/// section at the parent's output letter with the parent's section.
/// Within-level equality is resolved by joint partition refinement over
/// registry and candidates.  Ids are assigned in sorted candidate order
/// (generator index, parent id), which makes two runs byte-identical.
inline semigroup_enumeration enumerate_growth(const automaton& a, unsigned nmax,
                                              enumerate_options opts = {}) {
  if (!is_valid(a)) throw error("enumerate_growth: invalid automaton");
  if (nmax < 1) throw error("enumerate_growth: nmax must be >= 1");

  semigroup_enumeration res;
  res.source = a;
  res.monoid_mode = opts.monoid_mode;
  element_registry& reg = res.registry;
  reg.m = a.m;

  // element 0: the identity transformation
  for (letter_t x = 0; x < a.m; ++x) {
    reg.sigma.push_back(x);
    reg.sections.push_back(element_registry::identity_id);
  }
  reg.min_length.push_back(0);

  res.level_sets.push_back({element_registry::identity_id});
  if (opts.monoid_mode) res.identity_realized_at = 0;

  growth_tables& t = res.tables;
  t.delta.push_back(opts.monoid_mode ? 1 : 0);
  t.spherical.push_back(opts.monoid_mode ? 1 : 0);
  t.cumulative.push_back(opts.monoid_mode ? 1 : 0);

  const auto gens = static_cast<std::uint32_t>(a.n);
  std::vector<std::uint64_t> pair_keys;       // this level, sorted (gen, parent)
  std::vector<std::uint64_t> fresh_keys;      // pairs not yet memoized
  std::unordered_map<std::uint64_t, std::uint32_t> pending;  // fresh key -> local index

  for (unsigned level = 1; level <= nmax; ++level) {
    const std::vector<std::uint32_t>& prev = res.level_sets.back();
    const std::size_t reg_count = reg.size();

    pair_keys.clear();
    fresh_keys.clear();
    pending.clear();
    for (std::uint32_t g = 0; g < gens; ++g)
      for (std::uint32_t parent : prev) {
        const std::uint64_t key = detail::pair_key(g, parent);
        pair_keys.push_back(key);
        if (!res.product_memo.count(key)) {
          pending.emplace(key, static_cast<std::uint32_t>(fresh_keys.size()));
          fresh_keys.push_back(key);
        }
      }

    const std::size_t fresh = fresh_keys.size();
    std::vector<letter_t> cand_sigma(fresh * a.m);
    std::vector<std::uint32_t> cand_next(fresh * a.m);  // node index in the joint system

    // A parent in S_{n-1} has all its sections in S_{n-1} as well, so every
    // candidate section is either an already-memoized pair or another
    // candidate of this very level.
    for (std::size_t i = 0; i < fresh; ++i) {
      const std::uint32_t g = static_cast<std::uint32_t>(fresh_keys[i] >> 32);
      const std::uint32_t parent = static_cast<std::uint32_t>(fresh_keys[i]);
      const auto psig = reg.sigma_row(parent);
      const auto psec = reg.section_row(parent);
      for (letter_t x = 0; x < a.m; ++x) {
        const letter_t y = psig[x];
        cand_sigma[i * a.m + x] = a.output(g, y);
        const std::uint32_t sec_gen = a.step(g, y);
        const std::uint32_t sec_parent = psec[x];
        const std::uint64_t sec_key = detail::pair_key(sec_gen, sec_parent);
        if (auto it = res.product_memo.find(sec_key); it != res.product_memo.end()) {
          cand_next[i * a.m + x] = it->second;  // registry node
        } else {
          auto pit = pending.find(sec_key);
          if (pit == pending.end())
            throw error("enumerate_growth: section escaped the candidate level");
          cand_next[i * a.m + x] = static_cast<std::uint32_t>(reg_count + pit->second);
        }
      }
    }

    const std::size_t total = reg_count + fresh;
    auto out_at = [&](std::size_t node, std::size_t x) -> letter_t {
      return node < reg_count ? reg.sigma[node * a.m + x]
                              : cand_sigma[(node - reg_count) * a.m + x];
    };
    auto next_at = [&](std::size_t node, std::size_t x) -> std::size_t {
      return node < reg_count ? reg.sections[node * a.m + x]
                              : cand_next[(node - reg_count) * a.m + x];
    };
    const state_partition part = detail::refine_tables(total, a.m, out_at, next_at);

    // each class holds at most one registered element (they are pairwise distinct)
    std::vector<std::int64_t> class_id(part.class_count, -1);
    for (std::size_t node = 0; node < reg_count; ++node) {
      auto& slot = class_id[part.class_of[node]];
      if (slot >= 0) throw error("enumerate_growth: registry lost bisimulation-distinctness");
      slot = static_cast<std::int64_t>(node);
    }

    std::size_t new_elements = 0;
    for (std::size_t i = 0; i < fresh; ++i)
      if (class_id[part.class_of[reg_count + i]] < 0) {
        class_id[part.class_of[reg_count + i]] = static_cast<std::int64_t>(reg_count + new_elements);
        ++new_elements;
      }

    if (reg_count + new_elements > opts.element_cap) {
      t.truncated = true;
      t.truncated_at = level;
      break;
    }

    // materialize the new elements in id order
    reg.sigma.resize((reg_count + new_elements) * a.m);
    reg.sections.resize((reg_count + new_elements) * a.m);
    reg.min_length.resize(reg_count + new_elements, level);
    for (std::size_t i = 0; i < fresh; ++i) {
      const auto id = static_cast<std::uint32_t>(class_id[part.class_of[reg_count + i]]);
      if (id < reg_count) continue;  // resolved to an existing element
      for (letter_t x = 0; x < a.m; ++x) {
        reg.sigma[std::size_t{id} * a.m + x] = cand_sigma[i * a.m + x];
        const std::uint32_t target = cand_next[i * a.m + x];
        reg.sections[std::size_t{id} * a.m + x] =
            static_cast<std::uint32_t>(class_id[part.class_of[target]]);
      }
    }

    // memoize every pair of the level and collect the level set
    std::vector<std::uint32_t> level_ids;
    level_ids.reserve(pair_keys.size());
    for (const std::uint64_t key : pair_keys) {
      std::uint32_t id;
      if (auto it = res.product_memo.find(key); it != res.product_memo.end()) {
        id = it->second;
      } else {
        const std::uint32_t local = pending.at(key);
        id = static_cast<std::uint32_t>(class_id[part.class_of[reg_count + local]]);
        res.product_memo.emplace(key, id);
      }
      level_ids.push_back(id);
    }
    std::sort(level_ids.begin(), level_ids.end());
    level_ids.erase(std::unique(level_ids.begin(), level_ids.end()), level_ids.end());

    if (!res.identity_realized_at &&
        std::binary_search(level_ids.begin(), level_ids.end(), element_registry::identity_id))
      res.identity_realized_at = level;

    std::uint64_t delta = new_elements;
    if (res.identity_realized_at && *res.identity_realized_at == level) ++delta;
    t.delta.push_back(delta);
    t.spherical.push_back(level_ids.size());
    t.cumulative.push_back(t.cumulative.back() + delta);
    res.level_sets.push_back(std::move(level_ids));

    if (level == 1) {
      reg.generator_ids.resize(a.n);
      for (std::uint32_t g = 0; g < gens; ++g)
        reg.generator_ids[g] =
            res.product_memo.at(detail::pair_key(g, element_registry::identity_id));
    }

    if (opts.level_probe && !opts.level_probe(level, t)) break;
  }

  return res;
}

/// Id of the transformation equal to a composed generator word.  Words act
/// with the rightmost factor reading raw input first, so the fold walks the
/// word from the back.  The registry must have been enumerated to at least
/// the word's length.
inline std::uint32_t resolve_word(const semigroup_enumeration& e,
                                  std::span<const std::uint32_t> w) {
  if (w.empty()) return element_registry::identity_id;
  for (auto g : w)
    if (g >= e.source.n) throw error("resolve_word: generator index out of range");
  std::uint32_t cur = e.registry.generator_ids.at(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    const auto it = e.product_memo.find(detail::pair_key(w[i], cur));
    if (it == e.product_memo.end())
      throw error("resolve_word: word exceeds the enumerated horizon");
    cur = it->second;
  }
  return cur;
}

}  // namespace mealy
