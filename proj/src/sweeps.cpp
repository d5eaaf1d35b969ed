#include "ew/sweeps.hpp"

#include <cmath>
#include <limits>

namespace ew {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxCounterexamples = 10;

void record(SweepResult& r, json example) {
  ++r.violations;
  if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(std::move(example));
}

BlockWitness conjugate_local(const BlockWitness& bw, const CMatrix& u, const CMatrix& v) {
  const CMatrix frame = kron(u, v);
  const CMatrix w = frame * assemble(bw) * frame.adjoint();
  return partition(0.5 * (w + w.adjoint()), bw.dims());
}

}  // namespace

nlohmann::json SweepResult::to_json() const {
  return {{"prop", prop},
          {"n", n},
          {"checked", checked},
          {"violations", violations},
          {"tolerance", kSweepTol},
          {"counterexamples", counterexamples},
          {"details", details}};
}

std::vector<NamedWitness> example_witnesses() {
  return {{"flip", partition(flip_operator(), {2, 2})},
          {"ws_alpha", ws_alpha()},
          {"zhao_identity", zhao_witness(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)).bw}};
}

BlockWitness random_scaled_witness(Rng& rng, std::size_t d) {
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  const auto n = static_cast<Eigen::Index>(d);
  for (;;) {
    const CMatrix w11 = random_psd(rng, d) + 0.1 * CMatrix::Identity(n, n);
    const CMatrix w12 = random_complex(rng, d, d);
    const HermitianEig eig = herm_eig(w11);
    const CMatrix inv_sqrt = eig.vectors *
                             eig.values.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                             eig.vectors.adjoint();
    const CMatrix tilde = inv_sqrt * w12 * inv_sqrt;
    const double r = numerical_radius(tilde);
    const double norm = spectral_norm(tilde);
    if (norm - r < 1e-3 * norm) continue;
    const double root = r + unit(rng) * (norm - r);
    const BlockWitness bw{d, w11, w12, root * root * w11};
    return conjugate_local(bw, random_unitary(rng, 2), random_unitary(rng, d));
  }
}

SweepResult sweep_prop2(int n, std::uint64_t seed) {
  SweepResult r{"prop2", n};
  Rng rng(seed);
  std::uniform_int_distribution<int> pick_k(1, 8);
  double min_value = std::numeric_limits<double>::infinity();
  for (const NamedWitness& nw : example_witnesses()) {
    const WitnessTriple t = triple(nw.bw);
    for (int i = 0; i < n; ++i) {
      const DensityMatrix rho = random_separable(rng, nw.bw.d, pick_k(rng));
      const CriterionReport report = evaluate(t, rho.matrix());
      ++r.checked;
      min_value = std::min(min_value, report.nonlinear_value);
      if (report.nonlinear_value < -kSweepTol) {
        record(r, {{"witness", nw.name}, {"sample", i}, {"nonlinear_value", report.nonlinear_value}});
      }
    }
  }
  r.details = {{"min_nonlinear_value", min_value}};
  return r;
}

SweepResult sweep_prop3(int n, std::uint64_t seed) {
  SweepResult r{"prop3", n};
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick_d(2, 4);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  constexpr int kStatesPerWitness = 10;

  long long linear_detections = 0;
  long long nonlinear_only = 0;
  BlockWitness bw;
  WitnessTriple t;
  CVector most_negative;
  for (int i = 0; i < n; ++i) {
    if (i % kStatesPerWitness == 0) {
      bw = random_scaled_witness(rng, pick_d(rng));
      t = triple(bw);
      most_negative = herm_eig(assemble(bw)).vectors.col(0);
    }
    const double q = weight(rng);
    const DensityMatrix sigma = random_density(rng, bw.dims());
    const DensityMatrix rho(bw.dims(), q * outer(most_negative) + (1.0 - q) * sigma.matrix());
    const CriterionReport report = evaluate(t, rho.matrix());
    ++r.checked;
    if (report.linear_detects) ++linear_detections;
    if (report.nonlinear_detects && !report.linear_detects) ++nonlinear_only;
    if (report.ev_w < 0.0 && !(report.nonlinear_value < 0.0)) {
      record(r, {{"sample", i},
                 {"d", bw.d},
                 {"ev_w", report.ev_w},
                 {"nonlinear_value", report.nonlinear_value}});
    }
  }
  r.details = {{"linear_detections", linear_detections},
               {"nonlinear_only_detections", nonlinear_only}};
  return r;
}

SweepResult sweep_prop4(int n, std::uint64_t seed) {
  SweepResult r{"prop4", n};
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick_d(2, 4);
  double min_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const std::size_t d = pick_d(rng);
    const BipartiteDims dims{2, d};
    const WitnessTriple t = triple(partition(random_psd(rng, 2 * d), dims));
    for (int j = 0; j < n; ++j) {
      const DensityMatrix rho = (j % 2 == 0)
                                    ? DensityMatrix::pure(dims, random_unit_vector(rng, 2 * d))
                                    : random_density(rng, dims);
      const CriterionReport report = evaluate(t, rho.matrix());
      ++r.checked;
      min_value = std::min(min_value, report.nonlinear_value);
      if (report.nonlinear_value < -kSweepTol) {
        record(r, {{"operator", i}, {"state", j}, {"nonlinear_value", report.nonlinear_value}});
      }
    }
  }

  // Non-PSD witnesses: each has a state with a negative nonlinear value.
  const std::vector<NamedWitness> witnesses = example_witnesses();
  const std::vector<DensityMatrix> detected{white_noise_mix(psi_plus(), 0.5),
                                            bell_phi_plus_2xd(4), psi_plus()};
  json converse = json::array();
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    const double value = evaluate(witnesses[k].bw, detected[k]).nonlinear_value;
    ++r.checked;
    converse.push_back({{"witness", witnesses[k].name}, {"nonlinear_value", value}});
    if (!(value < 0.0)) record(r, {{"witness", witnesses[k].name}, {"converse_value", value}});
  }
  {
    constexpr double b = 0.5;
    const LewensteinWitness lw = lewenstein_witness(b);
    const double value = evaluate(partition(lw.w, {2, 4}), rho_tilde(b)).nonlinear_value;
    ++r.checked;
    converse.push_back({{"witness", "lewenstein_b0.5"}, {"nonlinear_value", value}});
    if (!(value < 0.0)) record(r, {{"witness", "lewenstein_b0.5"}, {"converse_value", value}});
  }
  r.details = {{"min_nonlinear_value_psd", min_value}, {"converse", converse}};
  return r;
}

SweepResult sweep(const std::string& prop, int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("sweep: n must be at least 1");
  if (prop == "prop2") return sweep_prop2(n, seed);
  if (prop == "prop3") return sweep_prop3(n, seed);
  if (prop == "prop4") return sweep_prop4(n, seed);
  throw ValidationError("unknown sweep '" + prop + "'");
}

}  // namespace ew
