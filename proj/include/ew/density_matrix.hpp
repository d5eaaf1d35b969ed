#pragma once

#include "ew/linalg.hpp"

namespace ew {

/// A validated bipartite state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  static constexpr double kTraceTol = 1e-12;

  /// Throws ValidationError unless `mat` is a density matrix on `dims`.
  DensityMatrix(BipartiteDims dims, CMatrix mat);

  /// |v><v| / <v|v>.
  static DensityMatrix pure(BipartiteDims dims, const CVector& v);

  /// I / D.
  static DensityMatrix maximally_mixed(BipartiteDims dims);

  const BipartiteDims& dims() const { return dims_; }
  const CMatrix& matrix() const { return mat_; }
  std::size_t d() const { return dims_.dim_b; }

  double purity() const;

 private:
  BipartiteDims dims_;
  CMatrix mat_;
};

double expectation(const CMatrix& obs, const DensityMatrix& rho);

}  // namespace ew
