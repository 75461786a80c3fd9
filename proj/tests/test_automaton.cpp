#include <catch2/catch_amalgamated.hpp>

#include "mealy/automaton.hpp"
#include "mealy/corpus.hpp"
#include "mealy/minimize.hpp"
#include "oracles.hpp"

using namespace mealy;

TEST_CASE("validate accepts the builtin tables and the identity") {
  CHECK(validate(builtin_a2()).empty());
  CHECK(validate(identity_automaton(3)).empty());
}

TEST_CASE("validate reports each out-of-range entry with its position") {
  automaton a(2, 2);
  a.step(0, 0) = 5;
  const auto v = validate(a);
  REQUIRE(v.size() == 1);
  CHECK(v[0].state == 0);
  CHECK(v[0].letter == 0);
  CHECK(v[0].in_pi);
  CHECK(v[0].value == 5);
  CHECK(v[0].bound == 2);
}

TEST_CASE("apply runs the transformation letter by letter") {
  const automaton a2 = builtin_a2();
  CHECK(apply(a2, 0, {0, 0}) == word{1, 1});
  CHECK(apply(a2, 0, {}) == word{});

  // the a6 head state swaps the two letters throughout
  const automaton a6 = builtin_a6();
  CHECK(apply(a6, 0, {0, 1}) == word{1, 0});
  CHECK(apply(a6, 0, {0, 1}) == oracle::composite_apply(a6, {0}, {0, 1}));

  CHECK_THROWS_AS(apply(a2, 0, {7}), error);
  CHECK_THROWS_AS(apply(a2, 9, {0}), error);
}

TEST_CASE("apply preserves length and prefixes") {
  const automaton a = builtin_a3();
  const word w = {0, 3, 1, 2, 2, 0, 1};
  for (state_t q = 0; q < a.n; ++q) {
    const word out = apply(a, q, w);
    REQUIRE(out.size() == w.size());
    for (std::size_t len = 0; len <= w.size(); ++len) {
      const word prefix(w.begin(), w.begin() + len);
      const word out_prefix(out.begin(), out.begin() + len);
      CHECK(apply(a, q, prefix) == out_prefix);
    }
  }
}

TEST_CASE("product composes with the right factor reading raw input") {
  const automaton a2 = builtin_a2();
  const automaton p = product(a2, a2);
  REQUIRE(p.n == 4);
  CHECK(refine_partition(p).class_count == 4);

  // against the oracle on a sample of words
  for (state_t qa = 0; qa < 2; ++qa)
    for (state_t qb = 0; qb < 2; ++qb)
      for (const auto& w : oracle::all_words(4, 3))
        CHECK(apply(p, qa * 2 + qb, w) == oracle::composite_apply(a2, {qa, qb}, w));
}

TEST_CASE("product with the identity is behaviorally the same machine") {
  const automaton a = builtin_a6();
  const automaton id = identity_automaton(a.m);
  const automaton right = product(a, id);
  const automaton left = product(id, a);
  for (state_t q = 0; q < a.n; ++q) {
    CHECK(equivalent_states(right, q, a, q));
    CHECK(equivalent_states(left, q, a, q));
  }
}

TEST_CASE("product rejects alphabet mismatch") {
  CHECK_THROWS_AS(product(builtin_a2(), builtin_a6()), error);
}

TEST_CASE("squaring the a6 head state gives the identity") {
  const automaton a6 = builtin_a6();
  const automaton p = product(a6, a6);
  CHECK(equivalent_states(p, 0, identity_automaton(2), 0));
}

TEST_CASE("power counts states and classes") {
  const automaton a2 = builtin_a2();
  CHECK(power(a2, 1).same_tables(a2));
  const automaton cube = power(a2, 3);
  CHECK(cube.n == 8);
  CHECK(refine_partition(cube).class_count == 7);

  const automaton a1sq = power(builtin_a1(), 2);
  CHECK(a1sq.n == 9);
  CHECK(refine_partition(a1sq).class_count == 8);

  CHECK_THROWS_AS(power(builtin_a1(), 20), resource_limit_error);
}

TEST_CASE("product association changes numbering but not behavior") {
  const automaton a = builtin_a2(), b = builtin_a3(), c = builtin_a4();
  const automaton lhs = product(product(a, b), c);
  const automaton rhs = product(a, product(b, c));
  for (state_t qa = 0; qa < a.n; ++qa)
    for (state_t qb = 0; qb < b.n; ++qb)
      for (state_t qc = 0; qc < c.n; ++qc) {
        const state_t l = (qa * static_cast<state_t>(b.n) + qb) * static_cast<state_t>(c.n) + qc;
        const state_t r = qa * static_cast<state_t>(b.n * c.n) + qb * static_cast<state_t>(c.n) + qc;
        CHECK(equivalent_states(lhs, l, rhs, r));
      }
}
