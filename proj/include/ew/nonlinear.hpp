#pragma once

#include "ew/density_matrix.hpp"
#include "ew/witness.hpp"

namespace ew {

/// W = W1 + W2 + W3 with W1 = |0><0| ⊗ W11, W2 = |1><1| ⊗ W22 and W3 the
/// off-diagonal qubit blocks.
struct WitnessTriple {
  CMatrix w1;
  CMatrix w2;
  CMatrix w3;
};

WitnessTriple triple(const BlockWitness& bw);

/// Mean values of a witness and its triple on one state, together with the
/// nonlinear quantity <W1><W2> - |<W3>|^2 / 4. Separable states keep it
/// nonnegative; a negative value certifies entanglement.
struct CriterionReport {
  static constexpr double kDetectTol = 1e-12;

  double ev_w1 = 0.0;
  double ev_w2 = 0.0;
  double ev_w3 = 0.0;
  double ev_w = 0.0;
  double nonlinear_value = 0.0;
  bool linear_detects = false;
  bool nonlinear_detects = false;

  // <W3> as obtained from the three measured mean values <W>, <W1>, <W2>.
  double ev_w3_derived() const { return ev_w - ev_w1 - ev_w2; }
};

CriterionReport evaluate(const BlockWitness& bw, const DensityMatrix& rho);

/// Same computation on precomputed operators; `rho` must match their size.
CriterionReport evaluate(const WitnessTriple& t, const CMatrix& rho);

double nonlinear_value(double ev_w1, double ev_w2, double ev_w3);

/// Largest squared Schmidt coefficient of a bipartite pure state.
double schmidt_squared_max(const CVector& xi, const BipartiteDims& dims);

/// Nonlinear correction of the witness W = (|phi><phi|)^{T2} on 2 ⊗ 2:
///   G(rho) = <W> - |Tr(V^{T2} rho)|^2 / s(xi),  V = |phi><xi|.
double guhne_value(const CVector& phi, const CVector& xi, const DensityMatrix& rho);

}  // namespace ew
