#pragma once

#include <cstdint>
#include <optional>

#include "ew/linalg.hpp"

namespace ew {

/// A Hermitian operator on C^2 ⊗ C^d in qubit block form
///   [[w11, w12], [w12^†, w22]].
struct BlockWitness {
  std::size_t d = 0;
  CMatrix w11;
  CMatrix w12;
  CMatrix w22;

  BipartiteDims dims() const { return {2, d}; }

  /// Throws ValidationError on shape mismatch or non-Hermitian diagonal blocks.
  void validate() const;
};

CMatrix assemble(const BlockWitness& bw);
BlockWitness partition(const CMatrix& w, const BipartiteDims& dims);

/// Conjugation by sigma_3 ⊗ I: flips the sign of w12.
BlockWitness qubit_phase_flip(const BlockWitness& bw);

struct SeesawOptions {
  std::uint64_t seed = 42;
  int n_starts = 256;
  int max_iter = 500;
  double value_tol = 1e-13;
};

struct ProductMinimum {
  double value = 0.0;
  CVector phi;  // unit vector on the first factor
  CVector xi;   // unit vector on the second factor
  int start_index = -1;
};

/// Multistart alternating minimization of <phi, xi| m |phi, xi> over product
/// pure states. Each half-step is an exact minimal-eigenvector solve. Returns
/// the lowest local minimum found; lower start index wins ties.
ProductMinimum min_product_expectation(const CMatrix& m, const BipartiteDims& dims,
                                       const SeesawOptions& options = {});

/// <phi, xi| m |phi, xi>.
double product_expectation(const CMatrix& m, const BipartiteDims& dims,
                           const CVector& phi, const CVector& xi);

struct EwVerdict {
  static constexpr double kBlockTol = 1e-9;
  static constexpr double kNegativeEigTol = 1e-10;

  double min_eigenvalue = 0.0;
  bool has_negative_eigenvalue = false;
  bool blocks_psd = false;
  double min_product_value = 0.0;
  bool witness_flag = false;
  std::optional<ProductMinimum> violating_product;
};

EwVerdict is_entanglement_witness(const BlockWitness& bw, const SeesawOptions& options = {});

struct ScaledCondition {
  double r_tilde = 0.0;
  double norm_tilde = 0.0;
  bool is_ew = false;
};

/// For W22 = alpha * W11 > 0: W is an EW iff r(W~12) <= sqrt(alpha) < ||W~12||,
/// with W~12 = W11^{-1/2} W12 W11^{-1/2}.
ScaledCondition check_scaled_condition(const CMatrix& w11, const CMatrix& w12, double alpha);

}  // namespace ew
