#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ffmat/matrix.hpp"

namespace ffmat {

// Matrix text format:
//
//   ring Z            (or: ring Q[x])
//   <rows> <cols>
//   <rows lines of cols whitespace-separated entries>
//
// Lines whose first non-blank character is '#' and blank lines are ignored.

/// Throws ParseError with a 1-based line/column, or RingMismatch when an
/// entry does not belong to the declared ring.
ExactMatrix parse_matrix(std::string_view text);
/// Canonical text; parse_matrix(serialize_matrix(A)) == A.
std::string serialize_matrix(const ExactMatrix& a);

ExactMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace ffmat
