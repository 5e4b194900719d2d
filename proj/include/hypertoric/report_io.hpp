#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hypertoric/abelian_group.hpp"
#include "hypertoric/analysis.hpp"
#include "hypertoric/int_matrix.hpp"

// Matrix files and report JSON.
//
// Text matrix files: a header line "rows cols" followed by `rows` lines of
// whitespace separated integers. Lines starting with '#' are comments; a
// comment of the form "# kind: B" declares the matrix to be the B side.
// A file whose first non-blank character is '{' is read as JSON:
//   {"kind": "A" | "B", "rows": [[...], ...], "cols": N}
// with "kind" defaulting to "A" and "cols" needed only when rows is empty.
// Entries may be JSON integers or decimal strings.
namespace hypertoric::report_io {

inline constexpr int kSchemaVersion = 1;

struct MatrixInput {
  IntMatrix matrix;
  MatrixKind kind = MatrixKind::A;
};

/// Throws Error(ParseError) with line and column of the offending token.
MatrixInput parse_matrix(std::string_view text);
MatrixInput read_matrix_file(const std::filesystem::path& path);

std::string emit_matrix_text(const IntMatrix& M, MatrixKind kind);
std::string emit_matrix_json(const IntMatrix& M, MatrixKind kind);

std::string_view kind_name(MatrixKind kind);

/// Canonical JSON: sorted keys, no whitespace, integers beyond 2^53 - 1 in
/// magnitude as decimal strings, 1-based indices. No trailing newline.
std::string emit_report(const AnalysisReport& report);
AnalysisReport parse_report(std::string_view json);

std::string emit_group(const AbelianGroup& group);

}  // namespace hypertoric::report_io
