#include <cmath>

#include <doctest.h>

#include "ew/reproduce.hpp"
#include "ew/thresholds.hpp"

using namespace ew;

TEST_CASE("quadratic_roots") {
  auto r = quadratic_roots(2.0, -3.0, 1.0);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(1.0));
  CHECK(r[1] == doctest::Approx(2.0));
  CHECK(quadratic_roots(1.0, 0.0, 1.0).empty());
  r = quadratic_roots(-0.5, 2.0, 0.0);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(0.25));
  // Tiny root next to a large one keeps full relative accuracy.
  r = quadratic_roots(1e-8, -1.0, 1e-8);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(1e-8).epsilon(1e-12));
}

TEST_CASE("threshold_from_poly") {
  const ThresholdResult t = threshold_from_poly(Criterion::kLinear, {0.5, -1.0});
  REQUIRE(t.p_min);
  CHECK(*t.p_min == doctest::Approx(0.5));
  REQUIRE(t.detects_interval());
  CHECK(t.detects_interval()->hi == doctest::Approx(1.0));

  CHECK_FALSE(threshold_from_poly(Criterion::kLinear, {1.0, 0.0, 0.0}).p_min);
  const ThresholdResult always = threshold_from_poly(Criterion::kLinear, {-1.0});
  REQUIRE(always.p_min);
  CHECK(*always.p_min == 0.0);
}

TEST_CASE("example 1 closed form") {
  const CMatrix w = flip_operator();
  const NoiseFamily fam = example1_family();
  CHECK_FALSE(linear_threshold(w, fam).p_min);
  const ThresholdResult nl = nonlinear_threshold(partition(w, {2, 2}), fam);
  REQUIRE(nl.p_min);
  CHECK(std::abs(*nl.p_min - 1.0 / 3.0) < 1e-12);

  const double bis = bisection_threshold([&](double p) {
    return evaluate(partition(w, {2, 2}), fam.member(p)).nonlinear_value;
  });
  CHECK(std::abs(bis - *nl.p_min) < 1e-10);
}

TEST_CASE("table 1 rows") {
  const BlockWitness bw = table1_witness();
  for (int i = 0; i < 4; ++i) {
    const NoiseFamily fam = example2_family(kTableB[i]);
    const ThresholdResult lin = linear_threshold(assemble(bw), fam);
    const ThresholdResult nl = nonlinear_threshold(bw, fam);
    REQUIRE(lin.p_min);
    REQUIRE(nl.p_min);
    CHECK(std::abs(*lin.p_min - kTable1Linear[i]) <= 5e-4);
    CHECK(std::abs(*nl.p_min - kTable1Nonlinear[i]) <= 5e-4);
    CHECK(*nl.p_min <= *lin.p_min + 1e-12);
  }
}

TEST_CASE("nonlinear polynomial is exact on the family") {
  const BlockWitness bw = table1_witness();
  const NoiseFamily fam = example2_family(0.4);
  const ThresholdResult nl = nonlinear_threshold(bw, fam);
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    CHECK(std::abs(nl.value_at(p) - evaluate(bw, fam.member(p)).nonlinear_value) < 1e-12);
  }
  REQUIRE(nl.p_min);
  CHECK(evaluate(bw, fam.member(*nl.p_min + 1e-6)).nonlinear_value < 0.0);
  CHECK(evaluate(bw, fam.member(*nl.p_min - 1e-6)).nonlinear_value >= 0.0);

  const ThresholdResult lin = linear_threshold(assemble(bw), fam);
  REQUIRE(lin.p_min);
  CHECK(expectation(assemble(bw), fam.member(*lin.p_min + 1e-6)) < 0.0);
  CHECK(expectation(assemble(bw), fam.member(*lin.p_min - 1e-6)) >= 0.0);
}

TEST_CASE("nonlinear threshold never exceeds the linear one") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const NoiseFamily fam{singlet(), random_separable(rng, 2, 3)};
    const BlockWitness bw = partition(flip_operator(), {2, 2});
    const ThresholdResult lin = linear_threshold(flip_operator(), fam);
    const ThresholdResult nl = nonlinear_threshold(bw, fam);
    REQUIRE(lin.p_min);
    REQUIRE(nl.p_min);
    CHECK(*nl.p_min <= *lin.p_min + 1e-12);
  }
}

TEST_CASE("bisection_threshold") {
  CHECK(bisection_threshold([](double p) { return 0.3 - p; }) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS_AS(bisection_threshold([](double p) { return 1.0 + p; }), ValidationError);
}
