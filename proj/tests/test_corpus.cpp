#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "mealy/analyze.hpp"
#include "mealy/corpus.hpp"
#include "mealy/csv.hpp"
#include "mealy/io.hpp"

using namespace mealy;

TEST_CASE("builtin tables match their unrolled forms") {
  const automaton a2 = builtin_a2();
  CHECK(a2.n == 2);
  CHECK(a2.m == 4);
  // f1 = (f0,f1,f1,f1)(x0,x2,x0,x1)
  CHECK(a2.step(1, 0) == 0);
  CHECK(a2.step(1, 1) == 1);
  CHECK(a2.output(1, 0) == 0);
  CHECK(a2.output(1, 1) == 2);
  CHECK(a2.output(1, 2) == 0);
  CHECK(a2.output(1, 3) == 1);

  const automaton a6 = builtin_a6();
  CHECK(a6.n == 3);
  CHECK(a6.m == 2);
  // f2 = (f1,f2)(x0,x0)
  CHECK(a6.step(2, 0) == 1);
  CHECK(a6.step(2, 1) == 2);
  CHECK(a6.output(2, 0) == 0);
  CHECK(a6.output(2, 1) == 0);

  const automaton a1 = builtin_a1();
  // the third generator reads f2 = (f1,f1)(x0,x0)
  CHECK(a1.step(2, 0) == 1);
  CHECK(a1.step(2, 1) == 1);
  CHECK(a1.output(2, 0) == 0);
  CHECK(a1.output(2, 1) == 0);
}

TEST_CASE("the b family structure") {
  const automaton b3 = build_bm_automaton(3);
  CHECK(b3.n == 2);
  CHECK(b3.m == 3);
  // f0 = (f0,f0,f1)(x1,x0,x2)
  CHECK(b3.step(0, 0) == 0);
  CHECK(b3.step(0, 2) == 1);
  CHECK(b3.output(0, 0) == 1);
  CHECK(b3.output(0, 1) == 0);
  CHECK(b3.output(0, 2) == 2);
  // f1 = (f0,f1,f1)(x1,x2,x2)
  CHECK(b3.step(1, 0) == 0);
  CHECK(b3.output(1, 0) == 1);
  CHECK(b3.output(1, 1) == 2);
  CHECK(b3.output(1, 2) == 2);

  CHECK(build_bm_automaton(7).m == 7);
  CHECK_THROWS_AS(build_bm_automaton(2), error);

  // quartic family has a cubic growth polynomial
  const auto vals = eval_closed_form_range(bm_closed_form(4), 1, 20);
  const auto fit = fit_eventually_polynomial(vals, 4);
  REQUIRE(fit.has_value());
  CHECK(fit->degree() == 3);
}

TEST_CASE("every entry validates and carries consistent fixtures") {
  for (const auto& entry : corpus_entries()) {
    CAPTURE(entry.name);
    CHECK(validate(entry.aut).empty());
    CHECK(entry.expected.parts.size() == entry.expected.modulus);
    // closed form defined everywhere from 1 on
    for (long n = 1; n <= 12; ++n) CHECK(eval_closed_form(entry.expected, n) >= 1);
    // quick relation sanity at tiny parameter bound
    CHECK(check_relations(entry.aut, entry.relations, 2).all_hold());
  }
}

TEST_CASE("lookup and errors") {
  CHECK(corpus_lookup("a4").aut.same_tables(builtin_a4()));
  CHECK(corpus_lookup("b5").aut.n == 2);
  CHECK_THROWS_AS(get_builtin("a5"), error);  // only recoverable by search
  CHECK_THROWS_AS(corpus_lookup("q7"), error);
}

#ifdef MEALY_CORPUS_DIR
TEST_CASE("the data directory round-trips against the builtins") {
  const std::string dir = MEALY_CORPUS_DIR;
  if (!std::filesystem::exists(dir + "/a2.mealy")) {
    WARN("corpus directory not populated; run mealy-corpus-gen");
    return;
  }
  for (const auto& entry : corpus_entries()) {
    CAPTURE(entry.name);
    const automaton a = load_automaton_file(dir + "/" + entry.name + ".mealy");
    CHECK(a.same_tables(entry.aut));
    const auto golden = sequence_from_csv(read_text_file(dir + "/" + entry.name + ".expected.csv"),
                                          "gamma");
    for (long n = golden.start; n < golden.end(); ++n)
      CHECK(golden.at(n) == eval_closed_form(entry.expected, n));
    const auto rels = relation_set_from_json(
        nlohmann::json::parse(read_text_file(dir + "/" + entry.name + ".relations.json")));
    CHECK(rels.relations.size() == entry.relations.relations.size());
  }
  // the searched machine has a committed table too
  if (std::filesystem::exists(dir + "/a5.mealy")) {
    const automaton a5 = load_automaton_file(dir + "/a5.mealy");
    CHECK(a5.n == 3);
    CHECK(a5.m == 2);
    CHECK(validate(a5).empty());
  }
}
#endif
