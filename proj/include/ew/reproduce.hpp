#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ew/thresholds.hpp"

namespace ew {

/// Per-cell tolerances for comparing against published values.
struct ReproTolerances {
  double example1_printed = 1e-3;
  double exact = 1e-12;
  double table1 = 5e-4;
  double table2 = 1e-6;
  double numerical_radius = 1e-9;

  nlohmann::json to_json() const;
  /// Applies "key=value"; throws ValidationError on an unknown key.
  void apply_override(const std::string& assignment);
};

/// One compared number.
struct ReproCell {
  std::string label;
  std::optional<double> b;
  std::string criterion;
  std::optional<double> computed;
  double expected = 0.0;
  double tolerance = 0.0;

  double abs_err() const;
  bool pass() const;
};

struct Reproduction {
  std::string target;
  std::vector<ReproCell> cells;
  nlohmann::json details = nlohmann::json::object();

  bool all_pass() const;
  nlohmann::json to_json() const;
  /// Rows "b,criterion,p_min_computed,p_min_paper,abs_err,pass".
  std::string to_csv() const;
};

/// Reference thresholds for the table1 and table2 targets, indexed like kTableB.
inline constexpr double kTableB[4] = {0.2, 0.4, 0.6, 0.8};
inline constexpr double kTable1Linear[4] = {0.2248, 0.1381, 0.0912, 0.0619};
inline constexpr double kTable1Nonlinear[4] = {0.2246, 0.1282, 0.0691, 0.0290};
inline constexpr double kTable2Linear[4] = {0.98073582801, 0.98681160139, 0.99264908563,
                                            0.99698286647};
inline constexpr double kTable2Nonlinear[4] = {0.98072097191, 0.98681096542, 0.99264906811,
                                               0.99698286637};

/// Families used by the threshold examples.
NoiseFamily example1_family();
NoiseFamily example2_family(double b);
NoiseFamily example3_family(double b);

/// Witness used for the table1 rows (ws_alpha with the qubit phase flipped).
BlockWitness table1_witness();

Reproduction reproduce_example1(const ReproTolerances& tol = {});
Reproduction reproduce_table1(const ReproTolerances& tol = {});
Reproduction reproduce_table2(const SeesawOptions& options, const ReproTolerances& tol = {});
Reproduction reproduce_guhne(std::uint64_t seed, const ReproTolerances& tol = {});
Reproduction reproduce_zhao(std::uint64_t seed, const ReproTolerances& tol = {});
Reproduction reproduce_scaled(const ReproTolerances& tol = {});

/// Dispatch by name: example1, table1, table2, guhne, zhao, scaled.
Reproduction reproduce(const std::string& target, const SeesawOptions& options,
                       const ReproTolerances& tol = {});

const std::vector<std::string>& reproduce_targets();

}  // namespace ew
