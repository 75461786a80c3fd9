#include <catch2/catch_amalgamated.hpp>

#include "mealy/corpus.hpp"
#include "mealy/io.hpp"

using namespace mealy;

TEST_CASE("serialize and reparse reproduce the tables") {
  for (const auto& entry : corpus_entries()) {
    const automaton back = parse_automaton(serialize(entry.aut));
    CHECK(back.same_tables(entry.aut));
    CHECK(back.name == entry.aut.name);
  }
}

TEST_CASE("a hand-written table file equals the builtin") {
  const std::string text = R"(# exponential growth machine
automaton a6
alphabet 2
states 3
q0: (q0,x1) (q0,x0)
q1: (q1,x0) (q2,x1)   # sections f1, f2
q2: (q1,x0) (q2,x0)
)";
  CHECK(parse_automaton(text).same_tables(builtin_a6()));
}

TEST_CASE("parse errors carry a position") {
  // three pairs on a four-letter state line
  const std::string bad = "automaton t\nalphabet 4\nstates 1\nq0: (q0,x0) (q0,x1) (q0,x2)\n";
  try {
    parse_automaton(bad);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line >= 4);
  }

  CHECK_THROWS_AS(parse_automaton("automaton t\nalphabet 2\nstates 1\nq0: (q5,x0) (q0,x1)\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_automaton("automaton t\nalphabet 2\nstates 1\nq0: (q0,x4) (q0,x1)\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_automaton("alphabet 2\nstates 1\nq0: (q0,x0) (q0,x1)\n"), parse_error);
  // rows out of order
  CHECK_THROWS_AS(
      parse_automaton("automaton t\nalphabet 2\nstates 2\nq1: (q0,x0) (q0,x1)\nq0: (q0,x0) (q0,x1)\n"),
      parse_error);
  // trailing garbage
  CHECK_THROWS_AS(parse_automaton(serialize(builtin_a2()) + "(q0,x0)"), parse_error);
}

TEST_CASE("json round trip") {
  for (const auto& entry : corpus_entries()) {
    const automaton back = automaton_from_json(to_json(entry.aut));
    CHECK(back.same_tables(entry.aut));
  }
  CHECK_THROWS_AS(automaton_from_json(nlohmann::json{{"m", 2}, {"n", 1}, {"pi", {{0}}},
                                                     {"lambda", {{3}}}}),
                  error);
}

TEST_CASE("serialize rejects names that break the grammar") {
  automaton a = builtin_a2();
  a.name = "two words";
  CHECK_THROWS_AS(serialize(a), error);
}
