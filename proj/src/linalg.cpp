#include "ew/linalg.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ew {

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = 1.0 + max_abs(m);
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

HermitianEig herm_eig(const CMatrix& m) {
  if (!is_hermitian(m)) {
    throw ValidationError("herm_eig: matrix is not Hermitian");
  }
  // Symmetrize so roundoff in the upper triangle cannot leak in.
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("herm_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const CMatrix& m) { return herm_eig(m).values(0); }

bool is_psd(const CMatrix& m) {
  const RVector values = herm_eig(m).values;
  const double top = values(values.size() - 1);
  return values(0) >= -tol::kPsd * (1.0 + std::max(top, 0.0));
}

double spectral_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double spectral_radius(const CMatrix& b) {
  if (b.rows() != b.cols()) {
    throw ValidationError("spectral_radius: matrix is not square");
  }
  if (b.size() == 0) return 0.0;
  Eigen::ComplexEigenSolver<CMatrix> solver(b, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("spectral_radius: eigensolver did not converge");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

namespace {

double rotated_top_eigenvalue(const CMatrix& b, double theta) {
  const Complex phase = std::polar(1.0, theta);
  const CMatrix h = 0.5 * (phase * b + std::conj(phase) * b.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("numerical_radius: eigensolver did not converge");
  }
  return solver.eigenvalues()(h.rows() - 1);
}

}  // namespace

double numerical_radius(const CMatrix& b) {
  if (b.rows() != b.cols()) {
    throw ValidationError("numerical_radius: matrix is not square");
  }
  if (b.size() == 0) return 0.0;

  constexpr int kGrid = 1024;
  constexpr double kWidth = 1e-12;
  const double step = 2.0 * std::numbers::pi / kGrid;

  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kGrid; ++k) {
    const double value = rotated_top_eigenvalue(b, k * step);
    if (value > best_value) {
      best_value = value;
      best = k;
    }
  }

  // Golden-section maximization on the bracket around the best grid point.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = (best - 1) * step;
  double hi = (best + 1) * step;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = rotated_top_eigenvalue(b, x1);
  double f2 = rotated_top_eigenvalue(b, x2);
  while (hi - lo > kWidth) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = rotated_top_eigenvalue(b, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = rotated_top_eigenvalue(b, x1);
    }
  }
  const double refined = rotated_top_eigenvalue(b, 0.5 * (lo + hi));
  return std::max({best_value, f1, f2, refined, 0.0});
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

CMatrix partial_transpose_2(const CMatrix& m, const BipartiteDims& dims) {
  const auto n = static_cast<Eigen::Index>(dims.total());
  if (m.rows() != n || m.cols() != n) {
    throw ValidationError("partial_transpose_2: matrix size does not match dims");
  }
  const auto db = static_cast<Eigen::Index>(dims.dim_b);
  const auto da = static_cast<Eigen::Index>(dims.dim_a);
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index k = 0; k < da; ++k) {
      out.block(i * db, k * db, db, db) = m.block(i * db, k * db, db, db).transpose();
    }
  }
  return out;
}

Complex trace_product(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw ValidationError("trace_product: dimension mismatch");
  }
  // Tr(AB) = sum_ij A_ij B_ji
  return (a.array() * b.transpose().array()).sum();
}

double expectation(const CMatrix& obs, const CMatrix& rho) {
  const Complex value = trace_product(obs, rho);
  if (std::abs(value.imag()) > tol::kExpectationImag) {
    throw NumericalError("expectation: Tr(Obs rho) has imaginary part " +
                         std::to_string(value.imag()));
  }
  return value.real();
}

CMatrix outer(const CVector& v) { return v * v.adjoint(); }

CMatrix pauli(int index) {
  using namespace std::complex_literals;
  CMatrix s(2, 2);
  switch (index) {
    case 1:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      s << 0.0, -1.0i, 1.0i, 0.0;
      break;
    case 3:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw ValidationError("pauli: index must be 1, 2 or 3");
  }
  return s;
}

}  // namespace ew
