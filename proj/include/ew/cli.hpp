#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ew::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInvalidInput = 2,
  kNumericalFailure = 3,
};

struct Options {
  std::uint64_t seed = 42;
  int starts = 256;
  std::vector<std::string> tol;  // key=value overrides
  std::string format = "json";   // json | csv
  bool timing = false;
};

struct Output {
  int exit_code = kOk;
  std::string text;
};

Output run_validate(const std::string& witness_file, const Options& options);
Output run_evaluate(const std::string& witness_file, const std::string& state_file,
                    const Options& options);
Output run_reproduce(const std::string& target, const Options& options);
Output run_sweep(const std::string& prop, int n, const Options& options);
/// Writes a named example operator or state as a matrix file.
Output run_example(const std::string& name, double b);

const std::vector<std::string>& example_names();

}  // namespace ew::cli
