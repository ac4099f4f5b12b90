#pragma once

#include <string>
#include <string_view>

#include "framekit/verify.hpp"

namespace framekit {

inline constexpr int kReportFormatVersion = 1;

/// Structured (JSON) report; numbers are written in shortest round-trip form,
/// so parse_report(to_json(r)) reproduces every double exactly.
std::string report_to_json(const RunReport& report);
RunReport parse_report(std::string_view text);

/// Flat projection of the per-check summaries, one row per check, numbers with
/// 17 significant digits. Absent values are empty cells.
std::string report_to_csv(const RunReport& report);

/// Structural validation of a report document against the published schema.
/// Throws FrameError(InvalidFile) naming the first offending key.
void validate_report_document(std::string_view text);

/// Plain-text rendering with one PASS/FAIL/PROBE line per check.
std::string report_summary(const RunReport& report);

}  // namespace framekit
