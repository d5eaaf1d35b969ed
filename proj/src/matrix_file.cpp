#include "ew/matrix_file.hpp"

#include <fstream>

namespace ew {

const char* to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::kState:
      return "state";
    case MatrixKind::kWitness:
      return "witness";
    case MatrixKind::kOperator:
      return "operator";
  }
  return "operator";
}

namespace {

MatrixKind kind_from_string(const std::string& s) {
  if (s == "state") return MatrixKind::kState;
  if (s == "witness") return MatrixKind::kWitness;
  if (s == "operator") return MatrixKind::kOperator;
  throw MalformedInput("matrix file: unknown kind '" + s + "'");
}

}  // namespace

DensityMatrix MatrixFile::as_state() const {
  try {
    return {dims, matrix};
  } catch (const ValidationError& e) {
    throw MalformedInput(std::string("matrix file: ") + e.what());
  }
}

BlockWitness MatrixFile::as_witness() const {
  try {
    return partition(matrix, dims);
  } catch (const ValidationError& e) {
    throw MalformedInput(std::string("matrix file: ") + e.what());
  }
}

MatrixFile parse_matrix_file(const nlohmann::json& j) {
  if (!j.is_object()) throw MalformedInput("matrix file: top level must be an object");
  for (const char* key : {"dims", "kind", "matrix"}) {
    if (!j.contains(key)) throw MalformedInput(std::string("matrix file: missing '") + key + "'");
  }
  const auto& dims = j.at("dims");
  if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_unsigned() ||
      !dims[1].is_number_unsigned()) {
    throw MalformedInput("matrix file: dims must be [2, d]");
  }
  MatrixFile file;
  file.dims = {dims[0].get<std::size_t>(), dims[1].get<std::size_t>()};
  if (file.dims.dim_a != 2 || file.dims.dim_b < 2) {
    throw MalformedInput("matrix file: dims must be [2, d] with d >= 2");
  }
  if (!j.at("kind").is_string()) throw MalformedInput("matrix file: kind must be a string");
  file.kind = kind_from_string(j.at("kind").get<std::string>());

  const auto& entries = j.at("matrix");
  const std::size_t n = file.dims.total();
  if (!entries.is_array() || entries.size() != n * n) {
    throw MalformedInput("matrix file: matrix must hold (2d)^2 entries");
  }
  file.matrix.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n * n; ++k) {
    const auto& pair = entries[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw MalformedInput("matrix file: entries must be [re, im] number pairs");
    }
    file.matrix(static_cast<Eigen::Index>(k / n), static_cast<Eigen::Index>(k % n)) =
        Complex(pair[0].get<double>(), pair[1].get<double>());
  }

  switch (file.kind) {
    case MatrixKind::kState:
      file.as_state();
      break;
    case MatrixKind::kWitness:
      file.as_witness();
      break;
    case MatrixKind::kOperator:
      break;
  }
  return file;
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("matrix file: cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("matrix file: invalid JSON: ") + e.what());
  }
  return parse_matrix_file(j);
}

nlohmann::json to_json(const MatrixFile& file) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < file.matrix.rows(); ++i) {
    for (Eigen::Index k = 0; k < file.matrix.cols(); ++k) {
      entries.push_back({file.matrix(i, k).real(), file.matrix(i, k).imag()});
    }
  }
  return {{"dims", {file.dims.dim_a, file.dims.dim_b}},
          {"kind", to_string(file.kind)},
          {"matrix", std::move(entries)}};
}

void save_matrix_file(const MatrixFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("matrix file: cannot write " + path.string());
  out << to_json(file).dump(2) << '\n';
}

}  // namespace ew
