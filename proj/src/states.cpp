#include "ew/states.hpp"

#include <cmath>

#include <Eigen/QR>

namespace ew {

namespace {

constexpr double kUnitaryTol = 1e-12;

CVector basis_pair(std::size_t n, std::size_t i, std::size_t j, double sign) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(i)) = 1.0 / std::sqrt(2.0);
  v(static_cast<Eigen::Index>(j)) = sign / std::sqrt(2.0);
  return v;
}

CMatrix ket_bra(std::size_t n, std::size_t i, std::size_t j) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return m;
}

bool is_unitary(const CMatrix& u) {
  if (u.rows() != u.cols()) return false;
  const CMatrix id = CMatrix::Identity(u.rows(), u.cols());
  return max_abs(u * u.adjoint() - id) <= kUnitaryTol * static_cast<double>(u.rows());
}

// Symmetrize and renormalize to strip roundoff before validation.
DensityMatrix clean_state(const BipartiteDims& dims, const CMatrix& m) {
  CMatrix h = 0.5 * (m + m.adjoint());
  h /= h.trace().real();
  return {dims, h};
}

}  // namespace

CVector phi_plus_vector(std::size_t d) {
  if (d < 2) throw ValidationError("phi_plus: d must be at least 2");
  return basis_pair(2 * d, 0, d + 1, 1.0);
}

CVector psi_plus_vector() { return basis_pair(4, 1, 2, 1.0); }
CVector singlet_vector() { return basis_pair(4, 1, 2, -1.0); }
CVector phi_minus_vector() { return basis_pair(4, 0, 3, -1.0); }

DensityMatrix bell_phi_plus_2xd(std::size_t d) {
  return DensityMatrix::pure({2, d}, phi_plus_vector(d));
}
DensityMatrix psi_plus() { return DensityMatrix::pure({2, 2}, psi_plus_vector()); }
DensityMatrix singlet() { return DensityMatrix::pure({2, 2}, singlet_vector()); }
DensityMatrix phi_minus() { return DensityMatrix::pure({2, 2}, phi_minus_vector()); }

DensityMatrix white_noise_mix(const DensityMatrix& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("white_noise_mix: p must lie in [0, 1]");
  const auto n = rho.matrix().rows();
  const CMatrix mixed =
      p * rho.matrix() + (1.0 - p) * CMatrix::Identity(n, n) / static_cast<double>(n);
  return {rho.dims(), mixed};
}

DensityMatrix NoiseFamily::member(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("noise family: p must lie in [0, 1]");
  if (rho_a.dims() != rho_b.dims()) throw ValidationError("noise family: dims differ");
  return clean_state(rho_a.dims(), p * rho_a.matrix() + (1.0 - p) * rho_b.matrix());
}

DensityMatrix horodecki_2x4(double b) {
  if (!(b > 0.0 && b < 1.0)) throw ValidationError("horodecki_2x4: b must lie in (0, 1)");
  CMatrix m = CMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) m(i, i) = b;
  m(4, 4) = m(7, 7) = 0.5 * (1.0 + b);
  m(4, 7) = m(7, 4) = 0.5 * std::sqrt(1.0 - b * b);
  for (int i = 0; i < 3; ++i) m(i, i + 5) = m(i + 5, i) = b;
  m /= 7.0 * b + 1.0;
  return {{2, 4}, m};
}

CMatrix flip_operator() {
  CMatrix f = CMatrix::Zero(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) f += kron(ket_bra(2, i, j), ket_bra(2, j, i));
  }
  return f;
}

BlockWitness ws_alpha() {
  CMatrix w12 = CMatrix::Zero(4, 4);
  w12(0, 1) = 1.5;
  w12(2, 3) = 1.5;
  return {4, CMatrix::Identity(4, 4), w12, kWsAlpha * CMatrix::Identity(4, 4)};
}

CMatrix v_transform() {
  using namespace std::complex_literals;
  const CMatrix block = (CMatrix::Identity(2, 2) + 1.0i * pauli(1)) / std::sqrt(2.0);
  CMatrix v = CMatrix::Zero(4, 4);
  for (const auto& [lo, hi] : {std::pair{0, 3}, std::pair{1, 2}}) {
    v(lo, lo) = block(0, 0);
    v(lo, hi) = block(0, 1);
    v(hi, lo) = block(1, 0);
    v(hi, hi) = block(1, 1);
  }
  return v;
}

DensityMatrix rho_tilde(double b) {
  const DensityMatrix rho = horodecki_2x4(b);
  const CMatrix local = kron(CMatrix::Identity(2, 2), v_transform());
  return clean_state(rho.dims(), local * rho.matrix() * local.adjoint());
}

CMatrix kernel_projector(const DensityMatrix& rho, double rel_tol) {
  const HermitianEig eig = herm_eig(rho.matrix());
  const double top = eig.values.cwiseAbs().maxCoeff();
  const auto n = eig.values.size();
  CMatrix p = CMatrix::Zero(n, n);
  int rank = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (eig.values(k) < rel_tol * top) {
      p += outer(eig.vectors.col(k));
      ++rank;
    }
  }
  if (rank == 0) throw ValidationError("kernel_projector: state has full rank");
  return p;
}

CMatrix lewenstein_with_epsilon(const CMatrix& p_plus_pt, double epsilon) {
  return p_plus_pt - epsilon * CMatrix::Identity(p_plus_pt.rows(), p_plus_pt.cols());
}

LewensteinWitness lewenstein_witness(double b, const SeesawOptions& options) {
  const DensityMatrix rho = rho_tilde(b);
  const CMatrix p = kernel_projector(rho);
  LewensteinWitness out;
  out.kernel_dim = static_cast<std::size_t>(std::lround(p.trace().real()));
  out.p_plus_pt = p + partial_transpose_2(p, rho.dims());
  out.argmin = min_product_expectation(out.p_plus_pt, rho.dims(), options);
  out.epsilon = out.argmin.value;
  out.w = lewenstein_with_epsilon(out.p_plus_pt, out.epsilon);
  return out;
}

std::vector<CMatrix> zhao_lambdas(std::size_t d) {
  using namespace std::complex_literals;
  std::vector<CMatrix> lambdas;
  for (std::size_t j = 1; j < d; ++j) lambdas.push_back(ket_bra(d, 0, 0) - ket_bra(d, j, j));
  lambdas.push_back(ket_bra(d, 0, 1) + ket_bra(d, 1, 0));
  lambdas.push_back(-1.0i * ket_bra(d, 0, 1) + 1.0i * ket_bra(d, 1, 0));
  return lambdas;
}

ZhaoWitness zhao_witness(const CMatrix& u, const CMatrix& v) {
  if (u.rows() != 2 || !is_unitary(u)) throw ValidationError("zhao_witness: U must be a 2x2 unitary");
  if (v.rows() < 2 || !is_unitary(v)) throw ValidationError("zhao_witness: V must be a d x d unitary, d >= 2");
  const auto d = static_cast<std::size_t>(v.rows());
  const auto n = static_cast<Eigen::Index>(d);

  ZhaoWitness z;
  z.d = d;
  z.u = u;
  z.v = v;
  z.bar = {d, 0.5 * ket_bra(d, 0, 0), 0.5 * ket_bra(d, 1, 0), 0.5 * ket_bra(d, 1, 1)};

  const CMatrix frame = z.frame();
  const auto conjugate = [&frame](const CMatrix& m) -> CMatrix {
    return frame * m * frame.adjoint();
  };
  z.w = conjugate(assemble(z.bar));
  z.bw = partition(0.5 * (z.w + z.w.adjoint()), {2, d});
  const WitnessTriple bar_triple = triple(z.bar);
  z.frame_triple = {conjugate(bar_triple.w1), conjugate(bar_triple.w2), conjugate(bar_triple.w3)};

  for (int i = 0; i < 3; ++i) z.a[i] = u * pauli(i + 1) * u.adjoint();
  for (const CMatrix& lambda : zhao_lambdas(d)) z.b.push_back(v * lambda * v.adjoint());

  const CMatrix i2 = CMatrix::Identity(2, 2);
  const CMatrix id = CMatrix::Identity(n, n);
  const double dd = static_cast<double>(d);
  const CMatrix& a1 = z.a[0];
  const CMatrix& a2 = z.a[1];
  const CMatrix& a3 = z.a[2];
  const CMatrix& b1 = z.b[0];

  z.r1 = 2.0 * kron(i2, id) + (2.0 - dd) * kron(i2, b1) + dd * kron(a3, b1);
  z.r2 = dd * kron(i2, b1) + 2.0 * kron(a3, id) + (2.0 - dd) * kron(a3, b1);
  for (std::size_t j = 1; j + 1 < d; ++j) {
    z.r1 += 2.0 * kron(i2, z.b[j]);
    z.r2 += 2.0 * kron(a3, z.b[j]);
  }
  z.r3 = 2.0 * dd * (kron(a1, z.b[d - 1]) + kron(a2, z.b[d]));
  z.norm = (2.0 * z.r1 + z.r3).trace().real();
  return z;
}

ZhaoInequality zhao_inequality(const ZhaoWitness& z, const DensityMatrix& rho) {
  if (rho.dims() != BipartiteDims{2, z.d}) {
    throw ValidationError("zhao_inequality: state dimensions do not match");
  }
  const double e1 = expectation(z.r1, rho);
  const double e2 = expectation(z.r2, rho);
  const double e3 = expectation(z.r3, rho);
  ZhaoInequality out;
  out.lhs = e1;
  out.rhs = std::sqrt(e2 * e2 + 0.25 * e3 * e3);
  out.violated = out.lhs < out.rhs - 1e-12;
  return out;
}

CMatrix random_complex(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> gauss;
  CMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  return g;
}

CVector random_unit_vector(Rng& rng, std::size_t n) {
  CVector v = random_complex(rng, n, 1).col(0);
  return v / v.norm();
}

CMatrix random_unitary(Rng& rng, std::size_t n) {
  const CMatrix g = random_complex(rng, n, n);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex diag = r(k, k);
    if (std::abs(diag) > 0.0) q.col(k) *= diag / std::abs(diag);
  }
  return q;
}

CMatrix random_psd(Rng& rng, std::size_t n) {
  const CMatrix g = random_complex(rng, n, n);
  const CMatrix p = g * g.adjoint();
  return 0.5 * (p + p.adjoint());
}

CMatrix random_hermitian(Rng& rng, std::size_t n) {
  const CMatrix g = random_complex(rng, n, n);
  return 0.5 * (g + g.adjoint());
}

DensityMatrix random_product_pure(Rng& rng, std::size_t d) {
  const CVector phi = random_unit_vector(rng, 2);
  const CVector xi = random_unit_vector(rng, d);
  return clean_state({2, d}, outer(kron(phi, xi)));
}

DensityMatrix random_separable(Rng& rng, std::size_t d, int k) {
  if (k < 1) throw ValidationError("random_separable: k must be at least 1");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(static_cast<std::size_t>(k));
  double total = 0.0;
  for (double& w : weights) total += (w = expo(rng));
  const auto n = static_cast<Eigen::Index>(2 * d);
  CMatrix mix = CMatrix::Zero(n, n);
  for (double w : weights) {
    mix += (w / total) * random_product_pure(rng, d).matrix();
  }
  return clean_state({2, d}, mix);
}

DensityMatrix random_density(Rng& rng, const BipartiteDims& dims) {
  return clean_state(dims, random_psd(rng, dims.total()));
}

DensityMatrix random_product_pure(std::uint64_t seed, std::size_t d) {
  Rng rng(seed);
  return random_product_pure(rng, d);
}

DensityMatrix random_separable(std::uint64_t seed, std::size_t d, int k) {
  Rng rng(seed);
  return random_separable(rng, d, k);
}

DensityMatrix random_density(std::uint64_t seed, const BipartiteDims& dims) {
  Rng rng(seed);
  return random_density(rng, dims);
}

}  // namespace ew
