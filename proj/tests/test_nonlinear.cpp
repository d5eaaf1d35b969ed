#include <cmath>

#include <doctest.h>

#include "ew/nonlinear.hpp"
#include "ew/states.hpp"
#include "ew/sweeps.hpp"

using namespace ew;

TEST_CASE("triple of the flip operator") {
  const WitnessTriple t = triple(partition(flip_operator(), {2, 2}));
  CMatrix w3 = CMatrix::Zero(4, 4);
  w3(1, 2) = 1.0;
  w3(2, 1) = 1.0;
  CHECK(max_abs(t.w3 - w3) == 0.0);
  CHECK(max_abs(t.w1 + t.w2 + t.w3 - flip_operator()) == 0.0);
  CHECK(t.w1(0, 0) == Complex(1.0));
  CHECK(t.w2(3, 3) == Complex(1.0));
}

TEST_CASE("triple sums back to the witness") {
  const BlockWitness ws = ws_alpha();
  const WitnessTriple t = triple(ws);
  CHECK(max_abs(t.w1 + t.w2 + t.w3 - assemble(ws)) == 0.0);
  CHECK(is_psd(t.w1));
  CHECK(is_psd(t.w2));
}

TEST_CASE("flip on a Werner-like state") {
  const DensityMatrix rho = white_noise_mix(singlet(), 0.5);
  const CriterionReport r = evaluate(partition(flip_operator(), {2, 2}), rho);
  CHECK(r.ev_w1 == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(r.ev_w2 == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(r.ev_w3 == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(r.ev_w == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(r.nonlinear_value == doctest::Approx(-3.0 / 64.0).epsilon(1e-14));
  CHECK(std::abs(r.ev_w3_derived() - r.ev_w3) < 1e-14);

  const CriterionReport s = evaluate(partition(flip_operator(), {2, 2}), singlet());
  CHECK(s.ev_w == doctest::Approx(-1.0));
  CHECK(s.linear_detects);
  CHECK(s.nonlinear_detects);
  CHECK(s.nonlinear_value == doctest::Approx(-0.25));
}

TEST_CASE("nonlinear correction of the phi-minus witness on the singlet") {
  const CMatrix w = partial_transpose_2(outer(phi_minus_vector()), {2, 2});
  const CriterionReport r = evaluate(partition(w, {2, 2}), singlet());
  CHECK(std::abs(r.ev_w - 0.5) < 1e-14);
  CHECK(std::abs(r.nonlinear_value + 0.0625) < 1e-14);
  CHECK_FALSE(r.linear_detects);
  CHECK(r.nonlinear_detects);
}

TEST_CASE("product states with a pure qubit factor sit at zero") {
  Rng rng(5);
  for (std::size_t d = 2; d <= 5; ++d) {
    const BlockWitness bw = random_scaled_witness(rng, d);
    CVector zero = CVector::Zero(2);
    zero(0) = 1.0;
    const CVector xi = random_unit_vector(rng, d);
    const DensityMatrix rho = DensityMatrix::pure({2, d}, kron(zero, xi));
    const CriterionReport r = evaluate(bw, rho);
    CHECK(std::abs(r.ev_w2) < 1e-14);
    CHECK(std::abs(r.ev_w3) < 1e-14);
    CHECK(std::abs(r.nonlinear_value) < 1e-14);
  }
}

TEST_CASE("evaluate validates sizes") {
  const WitnessTriple t = triple(ws_alpha());
  CHECK_THROWS_AS(evaluate(t, CMatrix::Identity(4, 4) / 4.0), ValidationError);
}

TEST_CASE("schmidt_squared_max") {
  CVector prod = CVector::Zero(4);
  prod(0) = 1.0;
  CHECK(schmidt_squared_max(prod, {2, 2}) == doctest::Approx(1.0));
  CHECK(schmidt_squared_max(singlet_vector(), {2, 2}) == doctest::Approx(0.5));
  CVector v = CVector::Zero(4);
  v(0) = std::sqrt(0.9);
  v(3) = std::sqrt(0.1);
  CHECK(schmidt_squared_max(v, {2, 2}) == doctest::Approx(0.9));
  CHECK(schmidt_squared_max(phi_plus_vector(4), {2, 4}) == doctest::Approx(0.5));
}

TEST_CASE("guhne_value against the closed form on the singlet") {
  const CVector phi = phi_minus_vector();
  CVector xi00 = CVector::Zero(4);
  xi00(0) = 1.0;
  CHECK(std::abs(guhne_value(phi, xi00, singlet()) - 0.375) < 1e-14);

  Rng rng(17);
  int positive = 0;
  for (int i = 0; i < 2000; ++i) {
    const CVector x = random_unit_vector(rng, 4);
    const double f =
        1.0 + std::sqrt(std::pow(std::norm(x(0)) - std::norm(x(1)) + std::norm(x(2)) - std::norm(x(3)), 2) +
                        4.0 * std::norm(std::conj(x(0)) * x(1) + std::conj(x(2)) * x(3)));
    const double oracle = 0.5 - std::norm(x(0) - x(3)) / (4.0 * f);
    const double g = guhne_value(phi, x, singlet());
    CHECK(std::abs(g - oracle) < 1e-12);
    if (g > 0.0) ++positive;
  }
  CHECK(positive == 2000);
  CHECK_THROWS_AS(guhne_value(phi_plus_vector(3), phi_plus_vector(3), bell_phi_plus_2xd(3)),
                  ValidationError);
}

TEST_CASE("separable states never violate the nonlinear criterion") {
  const SweepResult r = sweep_prop2(300, 11);
  CHECK(r.checked > 0);
  CHECK(r.ok());
}

TEST_CASE("linear detection implies nonlinear detection") {
  const SweepResult r = sweep_prop3(200, 12);
  CHECK(r.checked > 0);
  CHECK(r.ok());
}

TEST_CASE("positive operators never violate the criterion") {
  const SweepResult r = sweep_prop4(60, 13);
  CHECK(r.checked > 0);
  CHECK(r.ok());
}
