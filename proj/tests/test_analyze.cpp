#include <catch2/catch_amalgamated.hpp>

#include "mealy/analyze.hpp"
#include "mealy/corpus.hpp"
#include "mealy/enumerate.hpp"

using namespace mealy;

namespace {

int_sequence seq(std::vector<long> values, long start = 1) {
  int_sequence s;
  s.start = start;
  for (long v : values) s.values.emplace_back(v);
  return s;
}

int_sequence spherical(const automaton& a, unsigned nmax) {
  const auto e = enumerate_growth(a, nmax);
  int_sequence s;
  s.start = 1;
  for (unsigned n = 1; n <= nmax; ++n) s.values.push_back(e.tables.spherical[n]);
  return s;
}

}  // namespace

TEST_CASE("polynomial fits") {
  const auto lin = fit_eventually_polynomial(seq({4, 8, 12, 16}), 3);
  REQUIRE(lin.has_value());
  CHECK(lin->coeffs == std::vector<rational>{0, 4});
  CHECK(lin->valid_from == 1);

  CHECK_FALSE(fit_eventually_polynomial(seq({1, 2, 4, 8, 16, 32, 64, 128}), 5).has_value());

  // quadratic residue part of the square-growth machine, in its own index
  const auto gamma = eval_closed_form_range(builtin_closed_form("a4"), 1, 25);
  const auto odd = split_residues(gamma, 2)[1];
  const auto fit = fit_eventually_polynomial(odd, 3);
  REQUIRE(fit.has_value());
  CHECK(fit->coeffs == std::vector<rational>{2, rational(3, 2), rational(7, 2)});
}

TEST_CASE("exponential fits normalize the scale to index zero") {
  // 23*2^(j-2) - 1 from j = 2
  std::vector<long> vals;
  for (long j = 1; j <= 10; ++j) vals.push_back(j == 1 ? 8 : 23 * (1L << (j - 2)) - 1);
  const auto fit = fit_eventually_exponential(seq(vals, 1));
  REQUIRE(fit.has_value());
  CHECK(fit->scale0 == rational(23, 4));
  CHECK(fit->ratio == 2);
  CHECK(fit->offset == -1);
  CHECK(fit->valid_from == 2);
}

TEST_CASE("composite detection on the alternating-tail machine") {
  const auto v = detect_composite(spherical(builtin_a2(), 20), 4, 3);
  REQUIRE(v.composite);
  CHECK(v.k == 2);
  REQUIRE(v.parts.size() == 2);
  CHECK(std::get<polynomial_fit>(v.parts[0].form).coeffs == std::vector<rational>{8});
  CHECK(std::get<polynomial_fit>(v.parts[1].form).coeffs == std::vector<rational>{9});
  CHECK(v.witness.has_value());
}

TEST_CASE("composite detection on the doubling machine") {
  const auto v = detect_composite(spherical(builtin_a1(), 20), 4, 3);
  REQUIRE(v.composite);
  CHECK(v.k == 2);
  const auto& even = std::get<exponential_fit>(v.parts[0].form);
  const auto& odd = std::get<exponential_fit>(v.parts[1].form);
  CHECK(even.scale0 == rational(23, 4));
  CHECK(odd.scale0 == 8);
  CHECK(even.ratio == 2);
  CHECK(odd.ratio == 2);
}

TEST_CASE("single-form sequences are not composite") {
  std::vector<long> sq;
  for (long n = 1; n <= 16; ++n) sq.push_back(n * n + 1);
  const auto v = detect_composite(seq(sq), 4, 3);
  CHECK_FALSE(v.composite);
  CHECK(v.note == "whole sequence admits a single closed form");
}

TEST_CASE("order comparison is a bounded diagnostic") {
  std::vector<long> n2, n3;
  for (long n = 1; n <= 24; ++n) {
    n2.push_back(n * n);
    n3.push_back(n * n * n);
  }
  const auto r = order_compare(seq(n2), seq(n3));
  CHECK(r.relation == order_relation::preceq);
  CHECK(r.forward.has_value());
  CHECK_FALSE(r.backward.has_value());

  const auto eq = order_compare(spherical(builtin_a2(), 20), seq(std::vector<long>(20, 9)));
  CHECK(eq.relation == order_relation::equivalent);

  std::vector<long> pow2;
  for (long n = 1; n <= 20; ++n) pow2.push_back(1L << n);
  const auto exp = order_compare(spherical(builtin_a1(), 20), seq(pow2));
  CHECK(exp.relation == order_relation::equivalent);
  REQUIRE(exp.backward.has_value());
  CHECK(exp.backward->c2 >= 2);  // 2^n only dominates through an index stretch
}
