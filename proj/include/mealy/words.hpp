#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/minimize.hpp"

namespace mealy {

/// A word over the generators (= states) of an automaton.  The empty word
/// denotes the identity transformation (monoid usage).
using generator_word = std::vector<std::uint32_t>;

struct word_machine_options {
  std::size_t node_cap = 1u << 21;
};

namespace detail {

/// Lazily built sub-automaton of a power automaton: nodes are state tuples
/// (leftmost factor applied last), explored only as far as reachable from
/// the root tuples.  Coordinates whose state induces the identity
/// transformation are dropped, which keeps tuples short and makes the empty
/// tuple the identity node.
class tuple_machine {
 public:
  explicit tuple_machine(const automaton& a, std::size_t node_cap)
      : a_(a), node_cap_(node_cap), skip_(identity_states(a)) {}

  std::uint32_t root(const generator_word& w) {
    std::u32string t;
    t.reserve(w.size());
    for (auto q : w) {
      if (q >= a_.n) throw error("word references a state out of range");
      if (!skip_[q]) t.push_back(q);
    }
    return explore(t);
  }

  std::size_t size() const { return sigma_.size() / a_.m; }
  letter_t out_at(std::size_t node, std::size_t x) const { return sigma_[node * a_.m + x]; }
  std::uint32_t next_at(std::size_t node, std::size_t x) const { return succ_[node * a_.m + x]; }

 private:
  std::uint32_t intern(const std::u32string& t) {
    auto [it, fresh] = index_.try_emplace(t, static_cast<std::uint32_t>(index_.size()));
    if (fresh) {
      if (index_.size() > node_cap_)
        throw resource_limit_error("words_equal: reachable tuple cap exceeded");
      queue_.push_back(t);
      sigma_.resize(index_.size() * a_.m);
      succ_.resize(index_.size() * a_.m);
    }
    return it->second;
  }

  std::uint32_t explore(const std::u32string& root_tuple) {
    const std::uint32_t root_id = intern(root_tuple);
    std::u32string next;
    while (!queue_.empty()) {
      const std::u32string t = std::move(queue_.front());
      queue_.pop_front();
      const std::uint32_t id = index_.at(t);
      for (letter_t x = 0; x < a_.m; ++x) {
        next.clear();
        letter_t y = x;
        // rightmost factor reads the raw letter; outputs thread leftwards
        for (std::size_t i = t.size(); i-- > 0;) {
          const auto q = static_cast<state_t>(t[i]);
          const state_t qn = a_.step(q, y);
          y = a_.output(q, y);
          if (!skip_[qn]) next.push_back(qn);
        }
        std::reverse(next.begin(), next.end());
        sigma_[std::size_t{id} * a_.m + x] = y;
        succ_[std::size_t{id} * a_.m + x] = intern(next);
      }
    }
    return root_id;
  }

  const automaton& a_;
  std::size_t node_cap_;
  std::vector<bool> skip_;
  std::unordered_map<std::u32string, std::uint32_t> index_;
  std::deque<std::u32string> queue_;
  std::vector<letter_t> sigma_;
  std::vector<std::uint32_t> succ_;
};

}  // namespace detail

/// Decide whether two generator words induce the same transformation on all
/// words.  Builds the reachable parts of the corresponding power automata
/// and compares the two root states by partition refinement, so no
/// enumeration horizon is involved.
inline bool words_equal(const automaton& a, const generator_word& w1, const generator_word& w2,
                        word_machine_options opts = {}) {
  detail::tuple_machine mach(a, opts.node_cap);
  const std::uint32_t r1 = mach.root(w1);
  const std::uint32_t r2 = mach.root(w2);
  if (r1 == r2) return true;
  const auto part = detail::refine_tables(
      mach.size(), a.m, [&](std::size_t i, std::size_t x) { return mach.out_at(i, x); },
      [&](std::size_t i, std::size_t x) { return mach.next_at(i, x); });
  return part.class_of[r1] == part.class_of[r2];
}

}  // namespace mealy
