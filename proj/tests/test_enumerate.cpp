#include <catch2/catch_amalgamated.hpp>

#include "mealy/corpus.hpp"
#include "mealy/enumerate.hpp"
#include "oracles.hpp"

using namespace mealy;

namespace {

std::vector<std::uint64_t> spherical(const semigroup_enumeration& e) {
  return {e.tables.spherical.begin() + 1, e.tables.spherical.end()};
}

}  // namespace

TEST_CASE("a2 levels stabilize into the alternating pair") {
  const auto e = enumerate_growth(builtin_a2(), 7);
  CHECK(spherical(e) == std::vector<std::uint64_t>{2, 4, 7, 8, 9, 8, 9});
  CHECK_FALSE(e.identity_realized_at.has_value());
}

TEST_CASE("a3 growth descends first at level ten") {
  const auto e = enumerate_growth(builtin_a3(), 10);
  CHECK(e.tables.spherical[9] == 21);
  CHECK(e.tables.spherical[10] == 20);
}

TEST_CASE("a6 level sets against the brute-force oracle") {
  const auto e = enumerate_growth(builtin_a6(), 2);
  CHECK(spherical(e) == std::vector<std::uint64_t>{3, 7});
  CHECK(oracle::brute_spherical(builtin_a6(), 2, 5) == 7);
  CHECK(e.identity_realized_at == 2u);  // the squared head state
}

TEST_CASE("small levels agree with the brute-force oracle everywhere") {
  for (const auto& entry : corpus_entries()) {
    const auto e = enumerate_growth(entry.aut, 3);
    for (unsigned n = 1; n <= 3; ++n) {
      CAPTURE(entry.name, n);
      CHECK(e.tables.spherical[n] ==
            oracle::brute_spherical(entry.aut, n, static_cast<unsigned>(entry.aut.n) + 3));
    }
  }
}

TEST_CASE("the inequality chain holds and cumulative sums delta") {
  for (const auto& entry : corpus_entries()) {
    const auto e = enumerate_growth(entry.aut, 8);
    const auto& t = e.tables;
    std::uint64_t acc = t.delta[0];
    for (unsigned n = 1; n <= t.levels(); ++n) {
      acc += t.delta[n];
      CHECK(t.delta[n] <= t.spherical[n]);
      CHECK(t.spherical[n] <= t.cumulative[n]);
      CHECK(t.cumulative[n] == acc);
      CHECK(t.cumulative[n] >= t.cumulative[n - 1]);
    }
  }
}

TEST_CASE("section closure and registry distinctness") {
  const auto e = enumerate_growth(builtin_a1(), 8);
  const auto& reg = e.registry;
  for (std::uint32_t id = 0; id < reg.size(); ++id)
    for (auto sec : reg.section_row(id)) {
      CHECK(sec < reg.size());
      CHECK(reg.min_length[sec] <= reg.min_length[id]);
    }
  // ids are assigned level by level
  for (std::uint32_t id = 1; id < reg.size(); ++id)
    CHECK(reg.min_length[id - 1] <= reg.min_length[id]);
}

TEST_CASE("two runs are identical") {
  const auto e1 = enumerate_growth(builtin_a4(), 10);
  const auto e2 = enumerate_growth(builtin_a4(), 10);
  CHECK(e1.registry.sigma == e2.registry.sigma);
  CHECK(e1.registry.sections == e2.registry.sections);
  CHECK(e1.registry.min_length == e2.registry.min_length);
  CHECK(e1.tables.spherical == e2.tables.spherical);
  CHECK(e1.level_sets == e2.level_sets);
}

TEST_CASE("the element cap truncates explicitly") {
  enumerate_options opts;
  opts.element_cap = 10;
  const auto e = enumerate_growth(builtin_a1(), 10, opts);
  CHECK(e.tables.truncated);
  CHECK(e.tables.levels() < 10);
  CHECK(e.tables.truncated_at == e.tables.levels() + 1);
}

TEST_CASE("monoid mode counts the identity from length zero") {
  enumerate_options opts;
  opts.monoid_mode = true;
  const auto e = enumerate_growth(builtin_a6(), 4, opts);
  CHECK(e.tables.delta[0] == 1);
  CHECK(e.tables.delta[1] == 3);
  CHECK(e.tables.delta[2] == 4);  // the identity already counted at level 0
  CHECK(e.tables.cumulative[1] == 4);
  // spherical counts are unaffected
  const auto plain = enumerate_growth(builtin_a6(), 4);
  CHECK(e.tables.spherical == plain.tables.spherical);
  CHECK(plain.tables.delta[2] == 5);  // identity surfaces here instead
}

TEST_CASE("resolve_word folds through the registry") {
  const auto e2 = enumerate_growth(builtin_a2(), 5);
  CHECK(resolve_word(e2, std::vector<std::uint32_t>{0, 0, 0}) ==
        resolve_word(e2, std::vector<std::uint32_t>{0, 0}));
  CHECK(resolve_word(e2, std::vector<std::uint32_t>{0}) == e2.registry.generator_ids[0]);

  const auto e6 = enumerate_growth(builtin_a6(), 4);
  CHECK(resolve_word(e6, std::vector<std::uint32_t>{0, 0}) == element_registry::identity_id);

  CHECK_THROWS_AS(resolve_word(e2, std::vector<std::uint32_t>{0, 1, 0, 1, 0, 1, 0, 1}), error);
  CHECK_THROWS_AS(resolve_word(e2, std::vector<std::uint32_t>{9}), error);
}

TEST_CASE("level sets store distinct ids in order") {
  const auto e = enumerate_growth(builtin_a3(), 6);
  for (const auto& level : e.level_sets) {
    for (std::size_t i = 1; i < level.size(); ++i) CHECK(level[i - 1] < level[i]);
    for (auto id : level) CHECK(id < e.registry.size());
  }
}
