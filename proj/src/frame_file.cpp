#include "framekit/frame_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "framekit/errors.hpp"

namespace framekit {
namespace {

using nlohmann::json;

[[noreturn]] void bad_file(const std::string& what) {
  throw FrameError(ErrorCode::InvalidFile, what);
}

json scalar_to_json(Real v) {
  return v;
}

json scalar_to_json(const Complex& v) {
  return json::array({v.real(), v.imag()});
}

template <FieldScalar S>
json matrix_to_json(const Operator<S>& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

double number_from_json(const json& j, const std::string& where) {
  if (!j.is_number()) bad_file(where + ": expected a number");
  return j.get<double>();
}

template <FieldScalar S>
S scalar_from_json(const json& j, const std::string& where) {
  if constexpr (std::same_as<S, Real>) {
    return number_from_json(j, where);
  } else {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) bad_file(where + ": expected a number or an [re, im] pair");
    return {number_from_json(j[0], where), number_from_json(j[1], where)};
  }
}

template <FieldScalar S>
Operator<S> matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    bad_file(where + ": expected a non-empty list of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Operator<S> m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) bad_file(where + ": ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = scalar_from_json<S>(row[static_cast<std::size_t>(c)], where);
  }
  return m;
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad_file(std::string("missing key '") + key + "'");
  return doc.at(key);
}

template <FieldScalar S>
json frame_json(const GFrame<S>& frame) {
  json doc = {{"format_version", kFrameFormatVersion},
              {"field", std::string(to_string(field_of<S>))},
              {"dim_h", frame.dim()},
              {"kind", "gframe"}};
  json comps = json::array();
  for (const auto& b : frame.blocks()) comps.push_back({{"lambda", matrix_to_json<S>(b)}});
  doc["components"] = std::move(comps);
  return doc;
}

template <FieldScalar S>
json frame_json(const GFusionFrame<S>& frame) {
  json doc = {{"format_version", kFrameFormatVersion},
              {"field", std::string(to_string(field_of<S>))},
              {"dim_h", frame.dim()},
              {"kind", "gfusion"}};
  json comps = json::array();
  for (const auto& c : frame.components()) {
    comps.push_back(
        {{"lambda", matrix_to_json<S>(c.lambda)}, {"basis", matrix_to_json<S>(c.basis)}, {"weight", c.weight}});
  }
  doc["components"] = std::move(comps);
  return doc;
}

template <FieldScalar S>
AnyFrame read_frame(const json& doc, Eigen::Index dim, bool fusion, const Tolerances& tol) {
  const auto& comps = require(doc, "components");
  if (!comps.is_array() || comps.empty()) bad_file("'components' must be a non-empty list");
  if (!fusion) {
    std::vector<Operator<S>> blocks;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      blocks.push_back(matrix_from_json<S>(require(comps[j], "lambda"), "component " + std::to_string(j)));
      if (blocks.back().cols() != dim) bad_file("component " + std::to_string(j) + ": lambda must have dim_h columns");
    }
    return GFrame<S>(std::move(blocks), tol);
  }
  std::vector<GFusionComponent<S>> out;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    std::string where = "component " + std::to_string(j);
    Operator<S> lambda = matrix_from_json<S>(require(comps[j], "lambda"), where + " lambda");
    Operator<S> basis = matrix_from_json<S>(require(comps[j], "basis"), where + " basis");
    double weight = number_from_json(require(comps[j], "weight"), where + " weight");
    Operator<S> gram = basis.adjoint() * basis;
    bool orthonormal = linops::norm<S>(gram - linops::identity<S>(basis.cols())) <= tol.rtol;
    if (!orthonormal) basis = linops::orthonormal_basis<S>(basis, tol);
    out.push_back({std::move(basis), std::move(lambda), weight});
  }
  return GFusionFrame<S>(dim, std::move(out), tol);
}

}  // namespace

Field field_of_frame(const AnyFrame& frame) {
  return std::visit([](const auto& f) { return field_of<typename std::decay_t<decltype(f.frame_operator())>::Scalar>; },
                    frame);
}

Eigen::Index dim_of_frame(const AnyFrame& frame) {
  return std::visit([](const auto& f) { return f.dim(); }, frame);
}

std::string serialize_frame(const AnyFrame& frame) {
  json doc = std::visit([](const auto& f) { return frame_json(f); }, frame);
  return doc.dump(2) + "\n";
}

AnyFrame parse_frame(std::string_view text, const Tolerances& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    bad_file(std::string("not valid JSON: ") + e.what());
  }
  const auto& version = require(doc, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kFrameFormatVersion) {
    bad_file("unsupported format_version");
  }
  const auto& field_j = require(doc, "field");
  const auto& kind_j = require(doc, "kind");
  const auto& dim_j = require(doc, "dim_h");
  if (!field_j.is_string() || !kind_j.is_string()) bad_file("'field' and 'kind' must be strings");
  if (!dim_j.is_number_integer() || dim_j.get<std::int64_t>() < 1) bad_file("'dim_h' must be a positive integer");
  std::string field = field_j.get<std::string>();
  std::string kind = kind_j.get<std::string>();
  if (kind != "gframe" && kind != "gfusion") bad_file("'kind' must be gframe or gfusion");
  const bool fusion = kind == "gfusion";
  const auto dim = static_cast<Eigen::Index>(dim_j.get<std::int64_t>());
  if (field == "real") return read_frame<Real>(doc, dim, fusion, tol);
  if (field == "complex") return read_frame<Complex>(doc, dim, fusion, tol);
  bad_file("'field' must be real or complex");
}

void save_frame(const AnyFrame& frame, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FrameError(ErrorCode::InvalidFile, "cannot write " + path.string());
  out << serialize_frame(frame);
  if (!out) throw FrameError(ErrorCode::InvalidFile, "write failed for " + path.string());
}

AnyFrame load_frame(const std::filesystem::path& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw FrameError(ErrorCode::InvalidFile, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_frame(buffer.str(), tol);
}

}  // namespace framekit
