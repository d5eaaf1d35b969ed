#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ew/cli.hpp"
#include "ew/reproduce.hpp"

int main(int argc, char** argv) {
  using namespace ew::cli;

  CLI::App app{"Entanglement witnesses on 2 x d systems and their nonlinear improvement"};
  app.fallthrough();
  app.require_subcommand(1);

  Options options;
  std::string out_path;
  app.add_option("--seed", options.seed, "RNG seed")->capture_default_str();
  app.add_option("--starts", options.starts, "see-saw multistart count")->capture_default_str();
  app.add_option("--tol", options.tol, "tolerance override key=value (repeatable)");
  app.add_option("--format", options.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this path instead of stdout");
  app.add_flag("--timing", options.timing, "include wall time in the report");

  std::string witness_file;
  std::string state_file;
  auto* validate = app.add_subcommand("validate", "check the entanglement-witness conditions");
  validate->add_option("witness_file", witness_file)->required();

  auto* evaluate = app.add_subcommand("evaluate", "evaluate the linear and nonlinear criteria");
  evaluate->add_option("witness_file", witness_file)->required();
  evaluate->add_option("state_file", state_file)->required();

  std::string target;
  auto* reproduce = app.add_subcommand("reproduce", "reproduce published values");
  reproduce->add_option("target", target)
      ->required()
      ->check(CLI::IsMember(ew::reproduce_targets()));

  std::string prop;
  int n = 0;
  auto* sweep = app.add_subcommand("sweep", "randomized property suite");
  sweep->add_option("prop", prop)->required()->check(CLI::IsMember({"prop2", "prop3", "prop4"}));
  sweep->add_option("-n", n, "number of samples")->required();

  std::string example_name;
  double b = 0.5;
  auto* example = app.add_subcommand("example", "write an example matrix file");
  example->add_option("name", example_name)->required()->check(CLI::IsMember(example_names()));
  example->add_option("--b", b, "Horodecki parameter")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  Output result;
  if (*validate) {
    result = run_validate(witness_file, options);
  } else if (*evaluate) {
    result = run_evaluate(witness_file, state_file, options);
  } else if (*reproduce) {
    result = run_reproduce(target, options);
  } else if (*sweep) {
    result = run_sweep(prop, n, options);
  } else {
    result = run_example(example_name, b);
  }

  if (out_path.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return kInvalidInput;
    }
    out << result.text;
  }
  return result.exit_code;
}
