#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhcert/closedform.hpp"
#include "hhcert/spec_io.hpp"

namespace hhcert {

enum ExitCode : int { kExitHolds = 0, kExitFails = 1, kExitNotComparable = 2, kExitInputError = 3 };

[[nodiscard]] int exit_code(Verdict v) noexcept;

/// Resolves a spec argument: "corpus:<id>", "-" for stdin, inline JSON
/// (first non-blank character '{'), otherwise a file path.
[[nodiscard]] ComparisonSpec load_spec(std::string_view source, std::istream& stdin_stream);

int cmd_check(std::string_view source, bool json, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_crossings(std::string_view source, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_regression_suite(std::ostream& out);

struct ScanOptions {
    std::string a_from;
    std::string a_to;
    std::string alpha_from;
    std::string alpha_to;
    std::string a_step;
    std::string alpha_step;
};

/// Inclusive grid, a outer and alpha inner. Throws std::invalid_argument
/// on a nonpositive step, an a in [-1, 0] or an alpha outside (0, 1/2).
/// A range whose start exceeds its end is empty.
[[nodiscard]] std::vector<GridPoint> scan_grid(const ScanOptions& opts);
[[nodiscard]] std::string render_scan_csv(const std::vector<CalibrationRow>& rows);
int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err);

struct OracleOptions {
    int grid = 100;
    std::optional<IntervalSpec> interval;
};

int cmd_oracle(std::string_view source, const OracleOptions& opts, std::istream& in, std::ostream& out,
               std::ostream& err);

}  // namespace hhcert
