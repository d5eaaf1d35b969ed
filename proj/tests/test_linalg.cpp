#include <cmath>
#include <random>

#include <doctest.h>

#include "ew/linalg.hpp"
#include "ew/states.hpp"

using namespace ew;
using namespace std::complex_literals;

namespace {

// Independent route for r(B): best of many random unit vectors, then
// alternating ascent (phase of x^†Bx, then top eigenvector of the rotated
// Hermitian part).
struct RadiusOracle {
  double sample_max = 0.0;
  double refined = 0.0;
};

RadiusOracle radius_oracle(const CMatrix& b, Rng& rng, int samples) {
  RadiusOracle out;
  CVector best;
  for (int s = 0; s < samples; ++s) {
    const CVector x = random_unit_vector(rng, static_cast<std::size_t>(b.rows()));
    const double value = std::abs(x.dot(b * x));
    if (value > out.sample_max) {
      out.sample_max = value;
      best = x;
    }
  }
  CVector x = best;
  double value = out.sample_max;
  for (int iter = 0; iter < 2000; ++iter) {
    const Complex z = x.dot(b * x);
    const Complex phase = std::abs(z) > 0 ? std::conj(z) / std::abs(z) : Complex(1.0);
    const CMatrix h = 0.5 * (phase * b + std::conj(phase) * b.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    x = solver.eigenvectors().col(h.rows() - 1);
    const double next = std::abs(x.dot(b * x));
    if (std::abs(next - value) < 1e-16) {
      value = next;
      break;
    }
    value = next;
  }
  out.refined = value;
  return out;
}

CMatrix diag(std::initializer_list<double> values) {
  CMatrix m = CMatrix::Zero(values.size(), values.size());
  int i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

}  // namespace

TEST_CASE("herm_eig on identity and diagonal inputs") {
  const HermitianEig id = herm_eig(CMatrix::Identity(4, 4));
  for (int i = 0; i < 4; ++i) CHECK(id.values(i) == doctest::Approx(1.0));

  const HermitianEig d = herm_eig(diag({-1.0, 0.0, 2.0}));
  CHECK(d.values(0) == doctest::Approx(-1.0));
  CHECK(d.values(1) == doctest::Approx(0.0));
  CHECK(d.values(2) == doctest::Approx(2.0));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(d.vectors(k, k)) == doctest::Approx(1.0));
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(herm_eig(m), ValidationError);
}

TEST_CASE("herm_eig reconstruction on random Hermitian matrices") {
  Rng rng(7);
  for (std::size_t n = 1; n <= 16; ++n) {
    const CMatrix m = random_hermitian(rng, n);
    const HermitianEig e = herm_eig(m);
    for (Eigen::Index k = 1; k < e.values.size(); ++k) CHECK(e.values(k - 1) <= e.values(k));
    const CMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK(spectral_norm(m - back) <= 1e-10 * (1.0 + spectral_norm(m)));
    CHECK(max_abs(e.vectors.adjoint() * e.vectors - CMatrix::Identity(n, n)) < 1e-12);
  }
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(CMatrix::Zero(3, 3)) == 0.0);

  CMatrix w12 = CMatrix::Zero(4, 4);
  w12(0, 1) = 1.5;
  w12(2, 3) = 1.5;
  CHECK(spectral_norm(w12) == doctest::Approx(1.5).epsilon(1e-14));

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_complex(rng, 3, 3);
    const double via_eig = std::sqrt(herm_eig(a.adjoint() * a).values(2));
    CHECK(std::abs(spectral_norm(a) - via_eig) < 1e-10);
  }
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius(CMatrix::Identity(3, 3)) == doctest::Approx(1.0));
  CMatrix nil = CMatrix::Zero(2, 2);
  nil(0, 1) = 1.0;
  CHECK(spectral_radius(nil) == doctest::Approx(0.0));
  CHECK(spectral_radius(diag({-3.0, 2.0})) == doctest::Approx(3.0));
}

TEST_CASE("numerical radius on known inputs") {
  CHECK(numerical_radius(diag({-3.0, 2.0})) == doctest::Approx(3.0).epsilon(1e-12));
  CMatrix jordan = CMatrix::Zero(2, 2);
  jordan(0, 1) = 1.5;
  CHECK(std::abs(numerical_radius(jordan) - 0.75) < 1e-12);
}

TEST_CASE("numerical radius against the random-vector oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 3; ++trial) {
    const CMatrix b = random_complex(rng, 4, 4);
    const double r = numerical_radius(b);
    const RadiusOracle oracle = radius_oracle(b, rng, 1'000'000);
    CHECK(oracle.sample_max <= r + 1e-12);
    CHECK(oracle.refined <= r + 1e-12);
    CHECK(std::abs(oracle.refined - r) < 1e-6);
  }
}

TEST_CASE("numerical radius sandwich on random matrices") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const CMatrix b = random_complex(rng, n, n);
    const double r = numerical_radius(b);
    const double norm = spectral_norm(b);
    CHECK(spectral_radius(b) <= r + 1e-10);
    CHECK(r <= norm + 1e-10);
    CHECK(norm / 2.0 <= r + 1e-10);
  }
}

TEST_CASE("kron") {
  CHECK(max_abs(kron(CMatrix(CMatrix::Identity(2, 2)), CMatrix(CMatrix::Identity(4, 4))) -
                CMatrix::Identity(8, 8)) == 0.0);

  Rng rng(3);
  const CMatrix m = random_complex(rng, 3, 3);
  CMatrix p0 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const CMatrix k = kron(p0, m);
  CHECK(max_abs(k.topLeftCorner(3, 3) - m) == 0.0);
  CHECK(max_abs(k.bottomRows(3)) == 0.0);
  CHECK(max_abs(k.topRightCorner(3, 3)) == 0.0);

  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_complex(rng, 2, 2), c = random_complex(rng, 2, 2);
    const CMatrix b = random_complex(rng, 3, 3), d = random_complex(rng, 3, 3);
    CHECK(max_abs(kron(a, b) * kron(c, d) - kron(CMatrix(a * c), CMatrix(b * d))) < 1e-12);
    const CMatrix e = random_complex(rng, 2, 2);
    CHECK(max_abs(kron(kron(a, b), e) - kron(a, kron(b, e))) < 1e-12);
  }
}

TEST_CASE("partial transpose") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_complex(rng, 2, 2);
    const CMatrix b = random_complex(rng, 3, 3);
    CHECK(max_abs(partial_transpose_2(kron(a, b), {2, 3}) - kron(a, CMatrix(b.transpose()))) <
          1e-12);
  }

  // F^{T2} = 2 |phi+><phi+|
  const CMatrix f = flip_operator();
  const CMatrix expected = 2.0 * outer(phi_plus_vector(2));
  CHECK(max_abs(partial_transpose_2(f, {2, 2}) - expected) < 1e-15);

  CHECK_THROWS_AS(partial_transpose_2(CMatrix::Identity(5, 5), {2, 2}), ValidationError);
}

TEST_CASE("partial transpose is an involution preserving trace and Hermiticity") {
  Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + trial % 4;
    const CMatrix m = random_hermitian(rng, 2 * d);
    const CMatrix pt = partial_transpose_2(m, {2, d});
    CHECK(max_abs(partial_transpose_2(pt, {2, d}) - m) == 0.0);
    CHECK(std::abs(pt.trace() - m.trace()) < 1e-12);
    CHECK(is_hermitian(pt));
  }
}

TEST_CASE("expectation") {
  Rng rng(4);
  const DensityMatrix rho = random_density(rng, {2, 3});
  CHECK(expectation(CMatrix::Identity(6, 6), rho) == doctest::Approx(1.0).epsilon(1e-14));

  // <F> on p|psi+><psi+| + (1-p) I/4 is p + (1-p)/2.
  for (double p : {0.0, 0.3, 0.75, 1.0}) {
    const DensityMatrix mixed = white_noise_mix(psi_plus(), p);
    CHECK(expectation(flip_operator(), mixed) == doctest::Approx(p + (1 - p) / 2).epsilon(1e-14));
  }

  const CMatrix w = partial_transpose_2(outer(phi_minus_vector()), {2, 2});
  CHECK(std::abs(expectation(w, singlet()) - 0.5) < 1e-15);

  CMatrix non_hermitian = CMatrix::Zero(4, 4);
  non_hermitian(1, 2) = 1.0i;
  CHECK_THROWS_AS(expectation(non_hermitian, psi_plus()), NumericalError);
}

TEST_CASE("psd check tolerance") {
  CHECK(is_psd(diag({0.0, 1.0})));
  CHECK(is_psd(diag({-1e-11, 1.0})));
  CHECK_FALSE(is_psd(diag({-1e-9, 1.0})));
}
