#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mealy/corpus.hpp"
#include "mealy/enumerate.hpp"
#include "mealy/words.hpp"

using namespace mealy;

TEST_CASE("recorded word identities hold") {
  CHECK(words_equal(builtin_a3(), {0, 1, 0}, {0}));
  CHECK(words_equal(builtin_a4(), {0, 1, 1, 1, 0}, {0, 1, 0}));
  CHECK_FALSE(words_equal(builtin_a2(), {0}, {1}));
}

TEST_CASE("the empty word is the identity") {
  const automaton a6 = builtin_a6();
  CHECK(words_equal(a6, {0, 0}, {}));
  CHECK_FALSE(words_equal(a6, {0}, {}));
  CHECK(words_equal(a6, {}, {}));
}

TEST_CASE("long mixed identity of the exponential machine") {
  CHECK(words_equal(builtin_a6(), {2, 0, 1, 0, 2}, {1, 0, 1, 0, 2}));
  CHECK_FALSE(words_equal(builtin_a6(), {2, 0, 1, 0, 2}, {1, 0, 1, 0, 1}));
}

TEST_CASE("word equality agrees with registry resolution") {
  // two independent decision paths: reachable tuple machines vs the
  // level-by-level registry
  std::mt19937 rng(7);
  for (const auto& entry : {get_builtin("a2"), get_builtin("a6"), build_bm(3)}) {
    const auto e = enumerate_growth(entry.aut, 6);
    for (int t = 0; t < 60; ++t) {
      generator_word w1(1 + rng() % 5), w2(1 + rng() % 5);
      for (auto& g : w1) g = rng() % entry.aut.n;
      for (auto& g : w2) g = rng() % entry.aut.n;
      const bool via_registry = resolve_word(e, w1) == resolve_word(e, w2);
      CAPTURE(entry.name, w1, w2);
      CHECK(words_equal(entry.aut, w1, w2) == via_registry);
    }
  }
}

TEST_CASE("bad generator indices are rejected") {
  CHECK_THROWS_AS(words_equal(builtin_a2(), {5}, {0}), error);
}

TEST_CASE("the node cap aborts instead of silently truncating") {
  word_machine_options opts;
  opts.node_cap = 2;
  CHECK_THROWS_AS(words_equal(builtin_a1(), {0, 1, 2, 0, 1, 2}, {2, 1, 0}, opts),
                  resource_limit_error);
}
