#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "ew/density_matrix.hpp"
#include "ew/nonlinear.hpp"
#include "ew/witness.hpp"

namespace ew {

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Pure states

/// (|00> + |11>)/sqrt2 on C^2 ⊗ C^d.
CVector phi_plus_vector(std::size_t d = 2);
/// (|01> + |10>)/sqrt2 on 2 ⊗ 2.
CVector psi_plus_vector();
/// (|01> - |10>)/sqrt2 on 2 ⊗ 2.
CVector singlet_vector();
/// (|00> - |11>)/sqrt2 on 2 ⊗ 2.
CVector phi_minus_vector();

DensityMatrix bell_phi_plus_2xd(std::size_t d);
DensityMatrix psi_plus();
DensityMatrix singlet();
DensityMatrix phi_minus();

/// p * rho + (1 - p) * I / D.
DensityMatrix white_noise_mix(const DensityMatrix& rho, double p);

/// Affine family p -> p * rho_a + (1 - p) * rho_b.
struct NoiseFamily {
  DensityMatrix rho_a;  // p = 1
  DensityMatrix rho_b;  // p = 0

  DensityMatrix member(double p) const;
};

// ---------------------------------------------------------------------------
// Reference states and witnesses

/// Horodecki's 2 ⊗ 4 PPT entangled state, 0 < b < 1.
DensityMatrix horodecki_2x4(double b);

/// Swap operator sum_ij |i><j| ⊗ |j><i| on 2 ⊗ 2.
CMatrix flip_operator();

inline constexpr double kWsAlpha = 0.5625;

/// Blocks W11 = I4, W22 = 0.75^2 I4 and W12 with 3/2 at (0,1) and (2,3).
BlockWitness ws_alpha();

/// (I + i sigma_1)/sqrt2 acting on span{|0>,|3>} and on span{|1>,|2>} of C^4.
CMatrix v_transform();

/// (I2 ⊗ V) rho_b (I2 ⊗ V^†).
DensityMatrix rho_tilde(double b);

/// Projector onto the eigenvectors of rho with eigenvalue below
/// rel_tol * lambda_max. Throws ValidationError if the kernel is empty.
CMatrix kernel_projector(const DensityMatrix& rho, double rel_tol = 1e-10);

struct LewensteinWitness {
  CMatrix w;            // P + P^{T2} - epsilon I
  CMatrix p_plus_pt;    // P + P^{T2}
  double epsilon = 0.0; // see-saw minimum of <e,f|P + P^{T2}|e,f>
  ProductMinimum argmin;
  std::size_t kernel_dim = 0;
};

LewensteinWitness lewenstein_witness(double b, const SeesawOptions& options = {});

/// W = P + P^{T2} - epsilon I for an explicit epsilon.
CMatrix lewenstein_with_epsilon(const CMatrix& p_plus_pt, double epsilon);

// ---------------------------------------------------------------------------
// Local-observable form of the witness (U ⊗ V) bar W_z (U ⊗ V)^†

struct ZhaoWitness {
  std::size_t d = 0;
  CMatrix u;
  CMatrix v;
  BlockWitness bar;          // bar W_z blocks
  CMatrix w;                 // (U ⊗ V) bar W_z (U ⊗ V)^†
  BlockWitness bw;           // partition of w
  WitnessTriple frame_triple;  // triple(bar) conjugated by U ⊗ V
  std::array<CMatrix, 3> a;  // A_i = U sigma_i U^†
  std::vector<CMatrix> b;    // B_j = V lambda_j V^†, j = 1..d+1
  CMatrix r1;
  CMatrix r2;
  CMatrix r3;
  double norm = 0.0;         // Tr(2 R1 + R3)

  CMatrix frame() const { return kron(u, v); }
};

/// lambda_1..lambda_{d+1}: |0><0| - |j><j| for j = 1..d-1, then
/// |0><1| + |1><0| and -i|0><1| + i|1><0|.
std::vector<CMatrix> zhao_lambdas(std::size_t d);

ZhaoWitness zhao_witness(const CMatrix& u, const CMatrix& v);

struct ZhaoInequality {
  double lhs = 0.0;  // <R1>
  double rhs = 0.0;  // sqrt(<R2>^2 + <R3>^2 / 4)
  bool violated = false;
};

ZhaoInequality zhao_inequality(const ZhaoWitness& z, const DensityMatrix& rho);

// ---------------------------------------------------------------------------
// Random generators (deterministic per seed)

CMatrix random_unitary(Rng& rng, std::size_t n);
CVector random_unit_vector(Rng& rng, std::size_t n);

DensityMatrix random_product_pure(Rng& rng, std::size_t d);
DensityMatrix random_separable(Rng& rng, std::size_t d, int k);
DensityMatrix random_density(Rng& rng, const BipartiteDims& dims);
/// Random PSD operator G G^† with G a complex Gaussian n x n matrix.
CMatrix random_psd(Rng& rng, std::size_t n);
CMatrix random_hermitian(Rng& rng, std::size_t n);
CMatrix random_complex(Rng& rng, std::size_t rows, std::size_t cols);

DensityMatrix random_product_pure(std::uint64_t seed, std::size_t d);
DensityMatrix random_separable(std::uint64_t seed, std::size_t d, int k);
DensityMatrix random_density(std::uint64_t seed, const BipartiteDims& dims);

}  // namespace ew
