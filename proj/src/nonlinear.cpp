#include "ew/nonlinear.hpp"

#include <Eigen/SVD>

namespace ew {

WitnessTriple triple(const BlockWitness& bw) {
  bw.validate();
  const auto n = static_cast<Eigen::Index>(bw.d);
  WitnessTriple t{CMatrix::Zero(2 * n, 2 * n), CMatrix::Zero(2 * n, 2 * n),
                  CMatrix::Zero(2 * n, 2 * n)};
  t.w1.topLeftCorner(n, n) = bw.w11;
  t.w2.bottomRightCorner(n, n) = bw.w22;
  t.w3.topRightCorner(n, n) = bw.w12;
  t.w3.bottomLeftCorner(n, n) = bw.w12.adjoint();
  return t;
}

double nonlinear_value(double ev_w1, double ev_w2, double ev_w3) {
  return ev_w1 * ev_w2 - 0.25 * ev_w3 * ev_w3;
}

CriterionReport evaluate(const WitnessTriple& t, const CMatrix& rho) {
  if (t.w1.rows() != rho.rows() || rho.rows() != rho.cols()) {
    throw ValidationError("evaluate: witness and state dimensions differ");
  }
  CriterionReport r;
  r.ev_w1 = expectation(t.w1, rho);
  r.ev_w2 = expectation(t.w2, rho);
  r.ev_w3 = expectation(t.w3, rho);
  r.ev_w = expectation(CMatrix(t.w1 + t.w2 + t.w3), rho);
  r.nonlinear_value = nonlinear_value(r.ev_w1, r.ev_w2, r.ev_w3);
  r.linear_detects = r.ev_w < -CriterionReport::kDetectTol;
  r.nonlinear_detects = r.nonlinear_value < -CriterionReport::kDetectTol;
  return r;
}

CriterionReport evaluate(const BlockWitness& bw, const DensityMatrix& rho) {
  if (rho.dims() != bw.dims()) {
    throw ValidationError("evaluate: witness and state dimensions differ");
  }
  return evaluate(triple(bw), rho.matrix());
}

double schmidt_squared_max(const CVector& xi, const BipartiteDims& dims) {
  if (static_cast<std::size_t>(xi.size()) != dims.total()) {
    throw ValidationError("schmidt_squared_max: vector size does not match dims");
  }
  const double norm2 = xi.squaredNorm();
  if (norm2 == 0.0) throw ValidationError("schmidt_squared_max: zero vector");
  const auto da = static_cast<Eigen::Index>(dims.dim_a);
  const auto db = static_cast<Eigen::Index>(dims.dim_b);
  CMatrix reshaped(da, db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < db; ++j) reshaped(i, j) = xi(i * db + j);
  }
  const double top = Eigen::JacobiSVD<CMatrix>(reshaped).singularValues()(0);
  return top * top / norm2;
}

double guhne_value(const CVector& phi, const CVector& xi, const DensityMatrix& rho) {
  const BipartiteDims qubits{2, 2};
  if (rho.dims() != qubits || phi.size() != 4 || xi.size() != 4) {
    throw ValidationError("guhne_value: only defined on 2 x 2 systems");
  }
  const CMatrix w = partial_transpose_2(outer(phi), qubits);
  const CMatrix v_pt = partial_transpose_2(phi * xi.adjoint(), qubits);
  const Complex ev_v = trace_product(v_pt, rho.matrix());
  return expectation(w, rho) - std::norm(ev_v) / schmidt_squared_max(xi, qubits);
}

}  // namespace ew
