#include "framekit/tolerance.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "framekit/errors.hpp"

namespace framekit {
namespace {

double parse_positive(std::string_view token) {
  std::string s(token);
  char* end = nullptr;
  double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(value) || value < 0.0) {
    throw FrameError(ErrorCode::InvalidConfig, "bad tolerance value '" + s + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

ToleranceConfig parse_tolerance_override(std::string_view text, ToleranceConfig base) {
  text = trim(text);
  if (text.empty()) return base;
  if (text.find('=') == std::string_view::npos) {
    double v = parse_positive(text);
    base.check.residual = v;
    base.check.margin = v;
    return base;
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw FrameError(ErrorCode::InvalidConfig, "expected key=value in '" + std::string(item) + "'");
    }
    auto key = trim(item.substr(0, eq));
    double v = parse_positive(trim(item.substr(eq + 1)));
    if (key == "rtol") base.numeric.rtol = v;
    else if (key == "htol") base.numeric.htol = v;
    else if (key == "pdtol") base.numeric.pdtol = v;
    else if (key == "rktol") base.numeric.rktol = v;
    else if (key == "residual") base.check.residual = v;
    else if (key == "margin") base.check.margin = v;
    else throw FrameError(ErrorCode::InvalidConfig, "unknown tolerance key '" + std::string(key) + "'");
  }
  return base;
}

ToleranceConfig tolerances_from_environment() {
  const char* env = std::getenv("FRAMEKIT_TOLERANCE");
  if (env == nullptr) return {};
  return parse_tolerance_override(env);
}

}  // namespace framekit
