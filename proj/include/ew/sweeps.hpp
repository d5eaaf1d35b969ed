#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ew/nonlinear.hpp"
#include "ew/states.hpp"

namespace ew {

/// Randomized checks of the separability statements behind the nonlinear
/// criterion. A violation is a concrete (operator, state) counterexample.
struct SweepResult {
  std::string prop;
  int n = 0;
  long long checked = 0;
  long long violations = 0;
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json details = nlohmann::json::object();

  bool ok() const { return violations == 0; }
  nlohmann::json to_json() const;
};

inline constexpr double kSweepTol = 1e-9;

struct NamedWitness {
  std::string name;
  BlockWitness bw;
};

/// F, W_s^alpha and W_z^{I,I} (d = 2).
std::vector<NamedWitness> example_witnesses();

/// Random EW with W22 = alpha W11 and alpha inside the window of the
/// scaled-block condition, conjugated by a random local unitary on the qudit.
BlockWitness random_scaled_witness(Rng& rng, std::size_t d);

/// Separable states x {F, W_s^alpha, W_z}: nonlinear value >= -tol.
SweepResult sweep_prop2(int n, std::uint64_t seed);
/// Random (EW, state) pairs: <W> < 0 implies a negative nonlinear value.
SweepResult sweep_prop3(int n, std::uint64_t seed);
/// n random PSD operators x n random states: nonlinear value >= -tol; plus
/// one detecting state per example witness.
SweepResult sweep_prop4(int n, std::uint64_t seed);

SweepResult sweep(const std::string& prop, int n, std::uint64_t seed);

}  // namespace ew
