// Acceptance suite: every recorded claim about the bundled machines, run at
// full stated ranges with exact integer comparisons, one pass/fail line per
// criterion.  Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mealy/analyze.hpp"
#include "mealy/corpus.hpp"
#include "mealy/csv.hpp"
#include "mealy/io.hpp"
#include "mealy/verify.hpp"

using namespace mealy;

namespace {

struct criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0 = no stated limit
  std::function<verification_report()> run;
};

std::string corpus_dir() {
#ifdef MEALY_CORPUS_DIR
  return MEALY_CORPUS_DIR;
#else
  return "corpus";
#endif
}

int_sequence spherical(const automaton& a, unsigned nmax) {
  const auto e = enumerate_growth(a, nmax);
  int_sequence s;
  s.start = 1;
  for (unsigned n = 1; n <= nmax; ++n) s.values.push_back(e.tables.spherical[n]);
  return s;
}

verification_report growth_and_descent(const std::string& name, unsigned nmax) {
  const auto entry = corpus_lookup(name);
  verification_report rep;
  const int_sequence bfs = spherical(entry.aut, nmax);
  const int_sequence expected = eval_closed_form_range(entry.expected, 1, nmax);
  rep.add_equal(name + ".growth.closed-form", "enumerated growth equals the closed form",
                "1 <= n <= " + std::to_string(nmax), to_string(expected), to_string(bfs));
  const auto want = fixtures::expected_descent(name);
  const auto got = first_descent(bfs);
  auto str = [](const std::optional<long>& v) {
    return v ? "n=" + std::to_string(*v) : std::string("none");
  };
  rep.add_equal(name + ".growth.first-descent", "first strict descent",
                "1 <= n <= " + std::to_string(nmax), str(want), str(got));
  return rep;
}

std::vector<criterion> criteria() {
  std::vector<criterion> list;

  list.push_back({1, "alternating-tail machine: seeds 2,4,7 then 8/9, descent at 6", 1.0, [] {
                    return growth_and_descent("a2", 30);
                  }});

  list.push_back({2, "linear machine: 2n / (5n-3)/2 parts, descent at 10", 1.0, [] {
                    return growth_and_descent("a3", 40);
                  }});

  list.push_back({3, "square machine: composite quadratics, 617 then 613 at 26/27", 5.0, [] {
                    verification_report rep = growth_and_descent("a4", 30);
                    const int_sequence bfs = spherical(builtin_a4(), 30);
                    rep.add_equal("a4.growth.peak-values", "values straddling the descent",
                                  "n in {26, 27}", "[617,613]",
                                  "[" + bfs.at(26).str() + "," + bfs.at(27).str() + "]");
                    return rep;
                  }});

  list.push_back({4, "doubling machine: 3,8,14 then scaled powers of two; composite split", 10.0,
                  [] {
                    verification_report rep = growth_and_descent("a1", 20);
                    rep.append(verify_a1_composite());
                    return rep;
                  }});

  list.push_back({5, "b family: binomial sums, floor differences, family shift", 10.0, [] {
                    verification_report rep;
                    rep.append(growth_and_descent("b3", 25));
                    rep.append(growth_and_descent("b4", 20));
                    rep.append(growth_and_descent("b5", 20));
                    for (unsigned m = 3; m <= 5; ++m)
                      rep.append(verify_bm_differences(m, m == 3 ? 25 : 20));
                    return rep;
                  }});

  list.push_back({6, "exponential machine: Fibonacci closed form and rational series", 5.0, [] {
                    verification_report rep = growth_and_descent("a6", 24);
                    rep.append(verify_a6_series(24));
                    return rep;
                  }});

  list.push_back({7, "nested series: partition second differences and their recurrence", 1.0, [] {
                    return verify_a5_series(60, 200);
                  }});

  list.push_back({8, "exhaustive scan recovers the intermediate-growth machine", 60.0, [] {
                    return verify_a5_search(10);
                  }});

  list.push_back({9, "minimization oracle equals level enumeration everywhere", 30.0, [] {
                    verification_report rep;
                    auto entries = corpus_entries();
                    const std::string a5_path = corpus_dir() + "/a5.mealy";
                    if (std::filesystem::exists(a5_path)) {
                      corpus_entry extra;
                      extra.name = "a5";
                      extra.aut = load_automaton_file(a5_path);
                      entries.push_back(std::move(extra));
                    }
                    for (const auto& entry : entries) {
                      const auto oracle = growth_by_minimization(entry.aut, 6);
                      const auto e = enumerate_growth(entry.aut, 6);
                      bool ok = true;
                      for (unsigned n = 1; n <= 6; ++n)
                        ok = ok && oracle[n - 1] == e.tables.spherical[n];
                      rep.add_bool(entry.name + ".oracle", "minimization matches enumeration",
                                   "1 <= n <= 6", ok);
                    }
                    return rep;
                  }});

  list.push_back({10, "every defining relation family holds", 10.0, [] {
                    verification_report rep;
                    verify_options opts;
                    opts.pbound = 8;
                    for (const auto& entry : corpus_entries())
                      rep.append(verify_relations_of(entry, opts));
                    return rep;
                  }});

  list.push_back({11, "normal forms: exact for the square machine, surfaced elsewhere", 0.0, [] {
                    verification_report rep;
                    rep.append(verify_normal_forms(
                        "a4.normal-forms", make_normal_form_grammar("a4", 12), builtin_a4(), 12,
                        /*hard=*/true));
                    rep.append(verify_normal_forms(
                        "a1.normal-forms", make_normal_form_grammar("a1", 12), builtin_a1(), 12,
                        /*hard=*/false));
                    for (unsigned m = 3; m <= 5; ++m)
                      rep.append(verify_normal_forms(
                          "b" + std::to_string(m) + ".normal-forms",
                          make_normal_form_grammar("b" + std::to_string(m), 12),
                          build_bm_automaton(m), 12, /*hard=*/false));
                    const std::string a5_path = corpus_dir() + "/a5.mealy";
                    if (std::filesystem::exists(a5_path))
                      rep.append(verify_normal_forms("a5.normal-forms",
                                                     make_normal_form_grammar("a5", 12),
                                                     load_automaton_file(a5_path), 12,
                                                     /*hard=*/false));
                    return rep;
                  }});

  list.push_back({12, "inequality chain on every run and on random machines", 0.0, [] {
                    verification_report rep;
                    for (const auto& entry : corpus_entries()) {
                      const auto e =
                          enumerate_growth(entry.aut, fixtures::verify_nmax(entry.name));
                      const auto& t = e.tables;
                      bool ok = true;
                      std::uint64_t acc = t.delta[0];
                      for (unsigned n = 1; n <= t.levels(); ++n) {
                        acc += t.delta[n];
                        ok = ok && t.delta[n] <= t.spherical[n] &&
                             t.spherical[n] <= t.cumulative[n] && t.cumulative[n] == acc &&
                             t.cumulative[n] >= t.cumulative[n - 1];
                      }
                      rep.add_bool(entry.name + ".chain", "inequality chain over the full run",
                                   "1 <= n <= " + std::to_string(t.levels()), ok);
                    }
                    rep.append(verify_random_chain(100, 6));
                    return rep;
                  }});

  return list;
}

}  // namespace

int main() {
  int failures = 0;
  double total = 0;
  for (const auto& c : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    verification_report rep;
    std::string exception_text;
    try {
      rep = c.run();
    } catch (const std::exception& e) {
      exception_text = e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += dt;

    const bool within_time = c.time_limit_s == 0.0 || dt < c.time_limit_s;
    const bool pass = exception_text.empty() && rep.all_pass() && within_time;
    if (!pass) ++failures;

    const std::string time_note =
        within_time ? "" : ", limit " + std::to_string(c.time_limit_s) + " s exceeded";
    std::printf("[%s] criterion %2d: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), dt, time_note.c_str());
    if (!exception_text.empty()) std::printf("       exception: %s\n", exception_text.c_str());
    for (const auto& check : rep.checks) {
      if (check.status == "fail") {
        std::printf("       fail %s (%s)\n", check.id.c_str(), check.range.c_str());
        std::printf("         expected %s\n         got      %s\n", check.expected.c_str(),
                    check.got.c_str());
      } else if (check.status == "diagnostic" && check.expected != check.got) {
        std::printf("       diagnostic %s: differs (%s)\n", check.id.c_str(), check.range.c_str());
        std::printf("         reference %s\n         observed  %s\n", check.expected.c_str(),
                    check.got.c_str());
      }
    }
  }
  std::printf("%d/12 criteria passed, %.2f s total\n", 12 - failures, total);
  return failures;
}
