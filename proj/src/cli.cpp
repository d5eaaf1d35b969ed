#include "ew/cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ew/matrix_file.hpp"
#include "ew/reproduce.hpp"
#include "ew/sweeps.hpp"

namespace ew::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json vector_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Flattens a JSON object to key,value lines.
void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_number_float()) {
    out << prefix << ',' << format17(j.get<double>()) << '\n';
  } else {
    out << prefix << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

SeesawOptions seesaw(const Options& options) {
  SeesawOptions s;
  s.seed = options.seed;
  s.n_starts = options.starts;
  return s;
}

ReproTolerances tolerances(const Options& options) {
  ReproTolerances tol;
  for (const std::string& assignment : options.tol) tol.apply_override(assignment);
  return tol;
}

json base_report(const std::string& command, json args, const Options& options) {
  return {{"command", command},
          {"args", std::move(args)},
          {"seed", options.seed},
          {"starts", options.starts},
          {"format", options.format},
          {"tolerances", tolerances(options).to_json()}};
}

// Runs `body`, maps exceptions to exit codes and serializes the report.
Output run(const std::string& command, json args, const Options& options,
           const std::function<int(json&)>& body) {
  const auto start = Clock::now();
  json report;
  int code = kOk;
  try {
    if (options.format != "json" && options.format != "csv") {
      throw ValidationError("--format must be json or csv");
    }
    if (options.starts < 1) throw ValidationError("--starts must be positive");
    report = base_report(command, args, options);
    code = body(report);
  } catch (const NumericalError& e) {
    code = kNumericalFailure;
    report = {{"command", command}, {"args", args}, {"error", e.what()}};
  } catch (const ValidationError& e) {
    code = kInvalidInput;
    report = {{"command", command}, {"args", args}, {"error", e.what()}};
  }
  report["exit_code"] = code;
  if (options.timing) {
    report["wall_time_s"] = std::chrono::duration<double>(Clock::now() - start).count();
  }

  Output out;
  out.exit_code = code;
  if (options.format == "csv" && report.contains("csv")) {
    out.text = report["csv"].get<std::string>();
  } else if (options.format == "csv") {
    std::ostringstream flat;
    flatten(report, "", flat);
    out.text = flat.str();
  } else {
    report.erase("csv");
    out.text = report.dump(2) + "\n";
  }
  return out;
}

json verdict_json(const EwVerdict& v) {
  json violating = nullptr;
  if (v.violating_product) {
    violating = {{"value", v.violating_product->value},
                 {"phi", vector_json(v.violating_product->phi)},
                 {"xi", vector_json(v.violating_product->xi)}};
  }
  return {{"min_eigenvalue", v.min_eigenvalue},
          {"has_negative_eigenvalue", v.has_negative_eigenvalue},
          {"blocks_psd", v.blocks_psd},
          {"min_product_value", v.min_product_value},
          {"witness_flag", v.witness_flag},
          {"violating_product", violating}};
}

json criterion_json(const CriterionReport& r) {
  return {{"ev_w", r.ev_w},
          {"ev_w1", r.ev_w1},
          {"ev_w2", r.ev_w2},
          {"ev_w3", r.ev_w3},
          {"nonlinear_value", r.nonlinear_value},
          {"linear_detects", r.linear_detects},
          {"nonlinear_detects", r.nonlinear_detects},
          {"measurements",
           {{"W", r.ev_w}, {"W1", r.ev_w1}, {"W2", r.ev_w2}, {"W3_derived", r.ev_w3_derived()}}}};
}

MatrixFile example_file(const std::string& name, double b) {
  const auto op = [](CMatrix m, BipartiteDims dims, MatrixKind kind) {
    return MatrixFile{dims, kind, std::move(m)};
  };
  const auto state = [](const DensityMatrix& rho) {
    return MatrixFile{rho.dims(), MatrixKind::kState, rho.matrix()};
  };
  if (name == "flip") return op(flip_operator(), {2, 2}, MatrixKind::kWitness);
  if (name == "identity") return op(CMatrix::Identity(4, 4), {2, 2}, MatrixKind::kWitness);
  if (name == "guhne_witness") {
    return op(partial_transpose_2(outer(phi_minus_vector()), {2, 2}), {2, 2}, MatrixKind::kWitness);
  }
  if (name == "ws_alpha") return op(assemble(ws_alpha()), {2, 4}, MatrixKind::kWitness);
  if (name == "zhao") {
    return op(zhao_witness(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)).w, {2, 2},
              MatrixKind::kWitness);
  }
  if (name == "singlet") return state(singlet());
  if (name == "psi_plus") return state(psi_plus());
  if (name == "maximally_mixed") return state(DensityMatrix::maximally_mixed({2, 2}));
  if (name == "horodecki") return state(horodecki_2x4(b));
  if (name == "rho_tilde") return state(rho_tilde(b));
  throw ValidationError("unknown example '" + name + "'");
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{
      "flip",    "identity", "guhne_witness",   "ws_alpha",   "zhao",
      "singlet", "psi_plus", "maximally_mixed", "horodecki", "rho_tilde"};
  return names;
}

Output run_validate(const std::string& witness_file, const Options& options) {
  return run("validate", {{"witness_file", witness_file}}, options, [&](json& report) {
    const MatrixFile file = load_matrix_file(witness_file);
    if (file.kind == MatrixKind::kState) throw MalformedInput("validate: expected a witness file");
    const EwVerdict verdict = is_entanglement_witness(file.as_witness(), seesaw(options));
    report["results"] = verdict_json(verdict);
    report["pass"] = true;
    return kOk;
  });
}

Output run_evaluate(const std::string& witness_file, const std::string& state_file,
                    const Options& options) {
  return run("evaluate", {{"witness_file", witness_file}, {"state_file", state_file}}, options,
             [&](json& report) {
               const MatrixFile w = load_matrix_file(witness_file);
               const MatrixFile s = load_matrix_file(state_file);
               if (w.kind == MatrixKind::kState) {
                 throw MalformedInput("evaluate: first file must be a witness");
               }
               if (s.kind != MatrixKind::kState) {
                 throw MalformedInput("evaluate: second file must be a state");
               }
               if (w.dims != s.dims) throw MalformedInput("evaluate: dimension mismatch");
               report["results"] = criterion_json(evaluate(w.as_witness(), s.as_state()));
               report["pass"] = true;
               return kOk;
             });
}

Output run_reproduce(const std::string& target, const Options& options) {
  return run("reproduce", {{"target", target}}, options, [&](json& report) {
    const Reproduction r = reproduce(target, seesaw(options), tolerances(options));
    report["results"] = r.to_json();
    report["pass"] = r.all_pass();
    report["csv"] = r.to_csv();
    return r.all_pass() ? kOk : kMismatch;
  });
}

Output run_sweep(const std::string& prop, int n, const Options& options) {
  return run("sweep", {{"prop", prop}, {"n", n}}, options, [&](json& report) {
    const SweepResult r = sweep(prop, n, options.seed);
    report["results"] = r.to_json();
    report["pass"] = r.ok();
    return r.ok() ? kOk : kMismatch;
  });
}

Output run_example(const std::string& name, double b) {
  Output out;
  try {
    out.text = to_json(example_file(name, b)).dump(2) + "\n";
    out.exit_code = kOk;
  } catch (const ValidationError& e) {
    out.text = json{{"command", "example"}, {"error", e.what()}}.dump(2) + "\n";
    out.exit_code = kInvalidInput;
  }
  return out;
}

}  // namespace ew::cli
