#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "framekit/gfusion.hpp"

namespace framekit {

inline constexpr int kFrameFormatVersion = 1;

using AnyFrame = std::variant<GFrame<Real>, GFrame<Complex>, GFusionFrame<Real>, GFusionFrame<Complex>>;

Field field_of_frame(const AnyFrame& frame);
Eigen::Index dim_of_frame(const AnyFrame& frame);

/// JSON frame document:
///   { "format_version": 1, "field": "real"|"complex", "dim_h": n,
///     "kind": "gframe"|"gfusion",
///     "components": [ { "lambda": [[...], ...], "basis": [[...]], "weight": w }, ... ] }
/// Matrices are lists of rows; complex entries are [re, im] pairs. "basis" and
/// "weight" appear for g-fusion frames only. A basis that is not orthonormal is
/// read as a spanning set and orthonormalized.
std::string serialize_frame(const AnyFrame& frame);
AnyFrame parse_frame(std::string_view text, const Tolerances& tol = {});

void save_frame(const AnyFrame& frame, const std::filesystem::path& path);
AnyFrame load_frame(const std::filesystem::path& path, const Tolerances& tol = {});

}  // namespace framekit
