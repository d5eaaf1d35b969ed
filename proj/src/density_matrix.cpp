#include "ew/density_matrix.hpp"

#include <cmath>

namespace ew {

DensityMatrix::DensityMatrix(BipartiteDims dims, CMatrix mat)
    : dims_(dims), mat_(std::move(mat)) {
  const auto n = static_cast<Eigen::Index>(dims_.total());
  if (mat_.rows() != n || mat_.cols() != n) {
    throw ValidationError("density matrix: size does not match dims");
  }
  if (!is_hermitian(mat_)) {
    throw ValidationError("density matrix: not Hermitian");
  }
  const Complex trace = mat_.trace();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw ValidationError("density matrix: trace is not 1");
  }
  if (!is_psd(mat_)) {
    throw ValidationError("density matrix: not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::pure(BipartiteDims dims, const CVector& v) {
  const double norm = v.norm();
  if (norm == 0.0) throw ValidationError("density matrix: zero state vector");
  return {dims, outer(v / norm)};
}

DensityMatrix DensityMatrix::maximally_mixed(BipartiteDims dims) {
  const auto n = static_cast<Eigen::Index>(dims.total());
  return {dims, CMatrix::Identity(n, n) / static_cast<double>(n)};
}

double DensityMatrix::purity() const { return trace_product(mat_, mat_).real(); }

double expectation(const CMatrix& obs, const DensityMatrix& rho) {
  return expectation(obs, rho.matrix());
}

}  // namespace ew
