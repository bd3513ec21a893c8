#pragma once

#include <string>
#include <string_view>

#include "egqldpc/code_analysis.hpp"
#include "egqldpc/code_builder.hpp"
#include "egqldpc/gf2.hpp"

namespace egqldpc {

inline constexpr std::string_view kReportSchema = "report-v1";

// MacKay alist, column section first:
//   cols rows / max-col-weight max-row-weight / column weights / row weights /
//   one line per column (1-based rows, 0-padded) / one line per row.
std::string write_alist(const BinMatrix& a);
// Strict inverse of write_alist. Throws MalformedAlist naming the line.
BinMatrix parse_alist(std::string_view text);

// Matrix Market coordinate pattern, entries in row-major order.
std::string write_mtx(const BinMatrix& a);
BinMatrix parse_mtx(std::string_view text);

// Key-sorted key=value lines, one record.
std::string write_report(const ClaimReport& r);

// Metadata record of an export bundle as a JSON document. When `inline_matrices`
// is set the matrices are embedded; otherwise `file_ext` names sibling files
// core.<ext>, h_orth.<ext>, stabilizer.<ext>.
std::string write_bundle_json(const CssCode& code, const ClaimReport& report, const BinMatrix& stabilizer,
                              bool inline_matrices, std::string_view file_ext);

// JSON sweep configuration:
//   {"families": ["h1", "h2", "parallel"],
//    "geometries": [[m, q], ...]   or   "m": [...], "q": [...]  (cartesian),
//    "exact_cap": 26, "budget": 100000000, "pair_budget": 10000000}
// Throws MalformedConfig.
SweepConfig parse_sweep_config(std::string_view text);

std::string write_sweep(const SweepResult& result);

}  // namespace egqldpc
