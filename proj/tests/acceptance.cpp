// One line per acceptance criterion; exit status is nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "ew/reproduce.hpp"
#include "ew/sweeps.hpp"

using namespace ew;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Largest |error| / tolerance over the cells, and whether all cells pass.
Outcome from_reproduction(const Reproduction& r) {
  double worst = 0.0;
  std::string worst_label;
  for (const ReproCell& c : r.cells) {
    if (!c.pass() && worst_label.empty()) worst_label = c.label;
    if (c.computed) worst = std::max(worst, c.abs_err());
  }
  std::string note = std::to_string(r.cells.size()) + " cells, max abs err " + fmt("%.3g", worst);
  if (!worst_label.empty()) note += ", first failing: " + worst_label;
  return {r.all_pass(), note};
}

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool ok = o.pass && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %d %s: %s; %.2fs (budget %.0fs)%s\n", ok ? "PASS" : "FAIL", id, name,
              o.note.c_str(), secs, budget_s, in_time ? "" : " OVER BUDGET");
  std::fflush(stdout);
}

Outcome from_sweep(const SweepResult& s) {
  return {s.ok(), s.prop + ": " + std::to_string(s.checked) + " checks, " +
                      std::to_string(s.violations) + " violations"};
}

}  // namespace

int main() {
  const SeesawOptions seesaw{42, 256};

  criterion(1, "example 1 threshold", 1.0, [] { return from_reproduction(reproduce_example1()); });
  criterion(2, "table 1 thresholds", 5.0, [] { return from_reproduction(reproduce_table1()); });
  criterion(3, "table 2 thresholds", 60.0, [&] {
    const Reproduction r = reproduce_table2(seesaw);
    Outcome o = from_reproduction(r);
    for (const auto& row : r.details["rows"]) {
      o.note += "; b=" + fmt("%.1f", row["b"].get<double>()) +
                " eps=" + fmt("%.7f", row["epsilon"].get<double>()) +
                " dp/deps=" + fmt("%.4f", row["dp_deps_linear"].get<double>());
    }
    return o;
  });
  criterion(4, "singlet counterexample", 5.0, [] { return from_reproduction(reproduce_guhne(42)); });
  criterion(5, "scaled block condition", 1.0, [] { return from_reproduction(reproduce_scaled()); });
  criterion(6, "property sweeps", 120.0, [] {
    const Outcome a = from_sweep(sweep_prop2(500, 42));
    const Outcome b = from_sweep(sweep_prop3(1000, 42));
    const Outcome c = from_sweep(sweep_prop4(200, 42));
    return Outcome{a.pass && b.pass && c.pass, a.note + "; " + b.note + "; " + c.note};
  });
  criterion(7, "local observable form", 10.0, [] { return from_reproduction(reproduce_zhao(42)); });
  criterion(8, "structural invariants", 10.0, [] {
    Rng rng(42);
    double worst_ppt = 0.0;
    double worst_trace = 0.0;
    for (int k = 1; k <= 9; ++k) {
      const DensityMatrix h = horodecki_2x4(0.1 * k);
      worst_ppt = std::min(worst_ppt, min_eigenvalue(partial_transpose_2(h.matrix(), h.dims())));
      worst_trace = std::max(worst_trace, std::abs(h.matrix().trace().real() - 1.0));
    }
    int sandwich_bad = 0;
    int involution_bad = 0;
    std::uniform_int_distribution<std::size_t> pick(2, 6);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = pick(rng);
      const CMatrix b = random_complex(rng, n, n);
      const double r = numerical_radius(b);
      if (spectral_radius(b) > r + 1e-9 || r > spectral_norm(b) + 1e-9) ++sandwich_bad;
      if (0.5 * spectral_norm(b) > r + 1e-9) ++sandwich_bad;
      const BipartiteDims dims{2, n};
      const CMatrix m = random_complex(rng, 2 * n, 2 * n);
      if (max_abs(partial_transpose_2(partial_transpose_2(m, dims), dims) - m) > 0.0) ++involution_bad;
    }
    const bool ok = worst_ppt >= -1e-12 && worst_trace <= 1e-12 && sandwich_bad == 0 &&
                    involution_bad == 0;
    return Outcome{ok, "min PPT eigenvalue " + fmt("%.3g", worst_ppt) + ", trace err " +
                           fmt("%.3g", worst_trace) + ", sandwich failures " +
                           std::to_string(sandwich_bad) + ", involution failures " +
                           std::to_string(involution_bad)};
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
