#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "ew/density_matrix.hpp"
#include "ew/witness.hpp"

namespace ew {

/// Schema problem or failed invariant in a matrix file.
class MalformedInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

enum class MatrixKind { kState, kWitness, kOperator };

const char* to_string(MatrixKind kind);

/// JSON wire format:
///   {"dims": [2, d], "kind": "state" | "witness" | "operator",
///    "matrix": [[re, im], ...]}   (row-major, (2d)^2 entries)
struct MatrixFile {
  BipartiteDims dims;
  MatrixKind kind = MatrixKind::kOperator;
  CMatrix matrix;

  DensityMatrix as_state() const;
  BlockWitness as_witness() const;
};

/// Parses and checks the kind's invariants. Throws MalformedInput.
MatrixFile parse_matrix_file(const nlohmann::json& j);
MatrixFile load_matrix_file(const std::filesystem::path& path);

nlohmann::json to_json(const MatrixFile& file);
void save_matrix_file(const MatrixFile& file, const std::filesystem::path& path);

}  // namespace ew
