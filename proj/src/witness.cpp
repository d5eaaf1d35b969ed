#include "ew/witness.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

namespace ew {

void BlockWitness::validate() const {
  const auto n = static_cast<Eigen::Index>(d);
  if (d == 0) throw ValidationError("block witness: d must be positive");
  for (const CMatrix* block : {&w11, &w12, &w22}) {
    if (block->rows() != n || block->cols() != n) {
      throw ValidationError("block witness: blocks must be d x d");
    }
  }
  if (!is_hermitian(w11) || !is_hermitian(w22)) {
    throw ValidationError("block witness: diagonal blocks must be Hermitian");
  }
}

CMatrix assemble(const BlockWitness& bw) {
  bw.validate();
  const auto n = static_cast<Eigen::Index>(bw.d);
  CMatrix w(2 * n, 2 * n);
  w.topLeftCorner(n, n) = bw.w11;
  w.topRightCorner(n, n) = bw.w12;
  w.bottomLeftCorner(n, n) = bw.w12.adjoint();
  w.bottomRightCorner(n, n) = bw.w22;
  return w;
}

BlockWitness partition(const CMatrix& w, const BipartiteDims& dims) {
  if (dims.dim_a != 2) throw ValidationError("partition: first factor must be a qubit");
  if (w.rows() != w.cols() || w.rows() % 2 != 0) {
    throw ValidationError("partition: matrix must be square with even dimension");
  }
  if (static_cast<std::size_t>(w.rows()) != dims.total()) {
    throw ValidationError("partition: matrix size does not match dims");
  }
  if (!is_hermitian(w)) throw ValidationError("partition: matrix is not Hermitian");
  const auto n = w.rows() / 2;
  BlockWitness bw{static_cast<std::size_t>(n), w.topLeftCorner(n, n), w.topRightCorner(n, n),
                  w.bottomRightCorner(n, n)};
  bw.validate();
  return bw;
}

BlockWitness qubit_phase_flip(const BlockWitness& bw) {
  BlockWitness out = bw;
  out.w12 = -bw.w12;
  return out;
}

namespace {

// <xi| M |xi> as a dim_a x dim_a operator.
CMatrix contract_second(const CMatrix& m, const BipartiteDims& dims, const CVector& xi) {
  const auto da = static_cast<Eigen::Index>(dims.dim_a);
  const auto db = static_cast<Eigen::Index>(dims.dim_b);
  CMatrix out(da, da);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out(i, j) = xi.dot(m.block(i * db, j * db, db, db) * xi);
    }
  }
  return out;
}

// <phi| M |phi> as a dim_b x dim_b operator.
CMatrix contract_first(const CMatrix& m, const BipartiteDims& dims, const CVector& phi) {
  const auto da = static_cast<Eigen::Index>(dims.dim_a);
  const auto db = static_cast<Eigen::Index>(dims.dim_b);
  CMatrix out = CMatrix::Zero(db, db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out += std::conj(phi(i)) * phi(j) * m.block(i * db, j * db, db, db);
    }
  }
  return out;
}

struct MinEigen {
  double value;
  CVector vector;
};

MinEigen min_eigenpair(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (h + h.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw NumericalError("see-saw: eigensolver did not converge");
  }
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

CVector random_unit(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> gauss;
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

ProductMinimum run_start(const CMatrix& h, const BipartiteDims& dims,
                         const SeesawOptions& options, int start) {
  std::seed_seq seq{static_cast<std::uint64_t>(options.seed),
                    static_cast<std::uint64_t>(start)};
  std::mt19937_64 rng(seq);
  CVector xi = random_unit(rng, static_cast<Eigen::Index>(dims.dim_b));
  CVector phi;
  double previous = std::numeric_limits<double>::infinity();
  double value = previous;
  for (int iter = 0; iter < options.max_iter; ++iter) {
    phi = min_eigenpair(contract_second(h, dims, xi)).vector;
    MinEigen step = min_eigenpair(contract_first(h, dims, phi));
    xi = std::move(step.vector);
    value = step.value;
    if (std::abs(previous - value) < options.value_tol) break;
    previous = value;
  }
  return {value, phi, xi, start};
}

}  // namespace

double product_expectation(const CMatrix& m, const BipartiteDims& dims, const CVector& phi,
                           const CVector& xi) {
  const CVector v = kron(phi, xi);
  return v.dot(m * v).real();
}

ProductMinimum min_product_expectation(const CMatrix& m, const BipartiteDims& dims,
                                       const SeesawOptions& options) {
  if (static_cast<std::size_t>(m.rows()) != dims.total() || m.rows() != m.cols()) {
    throw ValidationError("min_product_expectation: matrix size does not match dims");
  }
  if (!is_hermitian(m)) {
    throw ValidationError("min_product_expectation: matrix is not Hermitian");
  }
  if (options.n_starts < 1) {
    throw ValidationError("min_product_expectation: n_starts must be positive");
  }
  const CMatrix h = 0.5 * (m + m.adjoint());
  ProductMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (int start = 0; start < options.n_starts; ++start) {
    ProductMinimum candidate = run_start(h, dims, options, start);
    if (candidate.value < best.value) best = std::move(candidate);
  }
  return best;
}

EwVerdict is_entanglement_witness(const BlockWitness& bw, const SeesawOptions& options) {
  const CMatrix w = assemble(bw);
  EwVerdict verdict;
  verdict.min_eigenvalue = min_eigenvalue(w);
  verdict.has_negative_eigenvalue = verdict.min_eigenvalue < -EwVerdict::kNegativeEigTol;
  verdict.blocks_psd = is_psd(bw.w11) && is_psd(bw.w22);
  ProductMinimum minimum = min_product_expectation(w, bw.dims(), options);
  verdict.min_product_value = minimum.value;
  if (minimum.value < -EwVerdict::kBlockTol) verdict.violating_product = std::move(minimum);
  verdict.witness_flag = verdict.has_negative_eigenvalue && verdict.blocks_psd &&
                         verdict.min_product_value >= -EwVerdict::kBlockTol;
  return verdict;
}

ScaledCondition check_scaled_condition(const CMatrix& w11, const CMatrix& w12, double alpha) {
  if (!(alpha > 0.0)) throw ValidationError("check_scaled_condition: alpha must be positive");
  if (w11.rows() != w11.cols() || w12.rows() != w11.rows() || w12.cols() != w11.cols()) {
    throw ValidationError("check_scaled_condition: blocks must be d x d");
  }
  const HermitianEig eig = herm_eig(w11);
  const double top = eig.values(eig.values.size() - 1);
  if (!(top > 0.0) || eig.values(0) < 1e-10 * top) {
    throw ValidationError("check_scaled_condition: W11 must be positive definite");
  }
  const RVector inv_sqrt = eig.values.cwiseSqrt().cwiseInverse();
  const CMatrix w11_inv_sqrt =
      eig.vectors * inv_sqrt.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  const CMatrix tilde = w11_inv_sqrt * w12 * w11_inv_sqrt;

  ScaledCondition out;
  out.r_tilde = numerical_radius(tilde);
  out.norm_tilde = spectral_norm(tilde);
  const double root = std::sqrt(alpha);
  out.is_ew = out.r_tilde <= root + 1e-10 && root < out.norm_tilde - 1e-10;
  return out;
}

}  // namespace ew
