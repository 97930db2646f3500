#pragma once

#include <string>

#include "qlab/matrix.hpp"

namespace qlab {

/// qlab-matrix/1: {schema, base_q, row_labels, col_labels,
/// entries: [[i, j, "c0|c1|c2|c3"], ...]} with nonzeros in row-major order.
/// Round trips bit-exactly through import_matrix.
std::string matrix_to_json(const Operator& op);
Operator matrix_from_json(const std::string& text);

void export_matrix(const Operator& op, const std::string& path);
Operator import_matrix(const std::string& path);

} // namespace qlab
