#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ffmat/bareiss.hpp"
#include "ffmat/factors.hpp"

namespace ffmat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInputError = 2,
  kVerificationFailure = 3,
};

enum class Format { Json, Text };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Decomposition plus factor report as JSON (matrices embedded as
/// matrix-format strings) or as aligned text.
std::string emit_report(const FFLUDecomposition& dec, const FactorReport& report, Format format);

}  // namespace ffmat::cli
