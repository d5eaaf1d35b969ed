#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ew {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Raised when an input violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical routine fails or produces an inconsistent result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimensions of a bipartite space C^dim_a ⊗ C^dim_b. Basis vector |i>⊗|j>
/// has flat index i * dim_b + j (the qubit is the first factor).
struct BipartiteDims {
  std::size_t dim_a = 2;
  std::size_t dim_b = 2;

  std::size_t total() const { return dim_a * dim_b; }
  bool operator==(const BipartiteDims&) const = default;
};

namespace tol {
// Hermiticity: max |M_ij - conj(M_ji)| <= kHermitian * (1 + max |M_ij|).
inline constexpr double kHermitian = 1e-12;
// M >= 0 means lambda_min >= -kPsd * (1 + lambda_max).
inline constexpr double kPsd = 1e-10;
// Largest imaginary part tolerated in Tr(Obs rho).
inline constexpr double kExpectationImag = 1e-10;
}  // namespace tol

bool is_hermitian(const CMatrix& m, double rel_tol = tol::kHermitian);
bool is_psd(const CMatrix& m);

struct HermitianEig {
  RVector values;   // ascending
  CMatrix vectors;  // columns are orthonormal eigenvectors
};

HermitianEig herm_eig(const CMatrix& m);
double min_eigenvalue(const CMatrix& m);

double spectral_norm(const CMatrix& a);
double spectral_radius(const CMatrix& b);

/// r(B) = max over unit x of |x^† B x|, evaluated as
/// max_theta lambda_max((e^{i theta} B + e^{-i theta} B^†) / 2).
double numerical_radius(const CMatrix& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

/// Transposes every dim_b x dim_b block of m in place of the block.
CMatrix partial_transpose_2(const CMatrix& m, const BipartiteDims& dims);

/// Tr(obs * rho). Throws NumericalError if the imaginary part exceeds
/// tol::kExpectationImag.
double expectation(const CMatrix& obs, const CMatrix& rho);

/// Tr(obs * rho) without the reality check.
Complex trace_product(const CMatrix& a, const CMatrix& b);

CMatrix outer(const CVector& v);
double max_abs(const CMatrix& m);

/// Pauli matrices sigma_1, sigma_2, sigma_3 (index 1..3).
CMatrix pauli(int index);

}  // namespace ew
