#include "framekit/report.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "framekit/errors.hpp"

namespace framekit {
namespace {

using nlohmann::json;

[[noreturn]] void bad_report(const std::string& what) {
  throw FrameError(ErrorCode::InvalidFile, "report: " + what);
}

json optional_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::optional<double> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

double read_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json plan_to_json(const SuitePlan& plan) {
  json fields = json::array();
  for (Field f : plan.fields) fields.push_back(std::string(to_string(f)));
  json checks = json::array();
  for (CheckId id : plan.checks) checks.push_back(std::string(to_string(id)));
  const auto& t = plan.tolerances;
  return {{"dims", plan.dims},
          {"fields", fields},
          {"seeds", plan.seeds},
          {"base_seed", plan.base_seed},
          {"components", plan.components},
          {"samples", plan.samples},
          {"checks", checks},
          {"max_witnesses", plan.max_witnesses},
          {"tolerances",
           {{"rtol", t.numeric.rtol},
            {"htol", t.numeric.htol},
            {"pdtol", t.numeric.pdtol},
            {"rktol", t.numeric.rktol},
            {"residual", t.check.residual},
            {"margin", t.check.margin}}}};
}

SuitePlan plan_from_json(const json& j) {
  SuitePlan plan;
  plan.dims = j.at("dims").get<std::vector<std::int64_t>>();
  plan.fields.clear();
  for (const auto& f : j.at("fields")) plan.fields.push_back(field_from_string(f.get<std::string>()));
  plan.seeds = j.at("seeds").get<std::uint64_t>();
  plan.base_seed = j.at("base_seed").get<std::uint64_t>();
  plan.components = j.at("components").get<std::size_t>();
  plan.samples = j.at("samples").get<std::size_t>();
  plan.max_witnesses = j.at("max_witnesses").get<std::size_t>();
  plan.checks.clear();
  for (const auto& c : j.at("checks")) {
    auto id = check_from_string(c.get<std::string>());
    if (!id) bad_report("unknown check " + c.get<std::string>());
    plan.checks.push_back(*id);
  }
  const auto& t = j.at("tolerances");
  plan.tolerances.numeric.rtol = t.at("rtol").get<double>();
  plan.tolerances.numeric.htol = t.at("htol").get<double>();
  plan.tolerances.numeric.pdtol = t.at("pdtol").get<double>();
  plan.tolerances.numeric.rktol = t.at("rktol").get<double>();
  plan.tolerances.check.residual = t.at("residual").get<double>();
  plan.tolerances.check.margin = t.at("margin").get<double>();
  return plan;
}

json witness_to_json(const Witness& w) {
  json sample = w.sample ? json(*w.sample) : json(nullptr);
  return {{"field", w.field},
          {"dim", w.dim},
          {"seed", w.seed},
          {"frame", w.frame},
          {"subset", w.subset.indices()},
          {"sample", sample},
          {"value", std::isfinite(w.value) ? json(w.value) : json(nullptr)}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.field = j.at("field").get<std::string>();
  w.dim = j.at("dim").get<std::int64_t>();
  w.seed = j.at("seed").get<std::uint64_t>();
  w.frame = j.at("frame").get<std::string>();
  w.subset = IndexSubset(j.at("subset").get<std::vector<std::size_t>>());
  if (!j.at("sample").is_null()) w.sample = j.at("sample").get<std::size_t>();
  w.value = read_number(j.at("value"));
  return w;
}

std::string csv_number(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream out;
  out << std::setprecision(17) << *v;
  return out.str();
}

/// Key -> expected JSON type for the structural schema check.
enum class Kind { Number, Integer, Boolean, String, Array, Object, NumberOrNull, IntegerOrNull };

bool matches(const json& j, Kind kind) {
  switch (kind) {
    case Kind::Number: return j.is_number();
    case Kind::Integer: return j.is_number_integer();
    case Kind::Boolean: return j.is_boolean();
    case Kind::String: return j.is_string();
    case Kind::Array: return j.is_array();
    case Kind::Object: return j.is_object();
    case Kind::NumberOrNull: return j.is_number() || j.is_null();
    case Kind::IntegerOrNull: return j.is_number_integer() || j.is_null();
  }
  return false;
}

void expect(const json& obj, const std::string& path, std::initializer_list<std::pair<const char*, Kind>> keys) {
  if (!obj.is_object()) bad_report(path + " must be an object");
  for (const auto& [key, kind] : keys) {
    if (!obj.contains(key)) bad_report("missing " + path + "." + key);
    if (!matches(obj.at(key), kind)) bad_report(path + "." + key + " has the wrong type");
  }
}

}  // namespace

std::string report_to_json(const RunReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json witnesses = json::array();
    for (const auto& w : c.witnesses) witnesses.push_back(witness_to_json(w));
    checks.push_back({{"id", std::string(to_string(c.id))},
                      {"probe", c.probe},
                      {"instances", c.instances},
                      {"evaluations", c.evaluations},
                      {"max_residual", optional_number(c.max_residual)},
                      {"min_margin", optional_number(c.min_margin)},
                      {"pass", c.pass},
                      {"violations", c.violations},
                      {"witnesses", witnesses},
                      {"stats", c.stats}});
  }
  json doc = {{"format_version", kReportFormatVersion},
              {"source", report.source},
              {"plan", plan_to_json(report.plan)},
              {"checks", checks},
              {"pass", report.pass},
              {"wall_seconds", report.wall_seconds}};
  return doc.dump(2) + "\n";
}

RunReport parse_report(std::string_view text) {
  validate_report_document(text);
  json doc = json::parse(text);
  RunReport report;
  report.source = doc.at("source").get<std::string>();
  report.plan = plan_from_json(doc.at("plan"));
  report.pass = doc.at("pass").get<bool>();
  report.wall_seconds = doc.at("wall_seconds").get<double>();
  for (const auto& c : doc.at("checks")) {
    CheckSummary s;
    auto id = check_from_string(c.at("id").get<std::string>());
    if (!id) bad_report("unknown check id " + c.at("id").get<std::string>());
    s.id = *id;
    s.probe = c.at("probe").get<bool>();
    s.instances = c.at("instances").get<std::size_t>();
    s.evaluations = c.at("evaluations").get<std::size_t>();
    s.max_residual = read_optional(c.at("max_residual"));
    s.min_margin = read_optional(c.at("min_margin"));
    s.pass = c.at("pass").get<bool>();
    s.violations = c.at("violations").get<std::size_t>();
    for (const auto& w : c.at("witnesses")) s.witnesses.push_back(witness_from_json(w));
    s.stats = c.at("stats").get<std::map<std::string, double>>();
    report.checks.push_back(std::move(s));
  }
  return report;
}

std::string report_to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "id,probe,instances,evaluations,max_residual,min_margin,pass,violations,witnesses\n";
  for (const auto& c : report.checks) {
    out << to_string(c.id) << ',' << (c.probe ? "true" : "false") << ',' << c.instances << ',' << c.evaluations
        << ',' << csv_number(c.max_residual) << ',' << csv_number(c.min_margin) << ','
        << (c.pass ? "true" : "false") << ',' << c.violations << ',' << c.witnesses.size() << '\n';
  }
  return out.str();
}

void validate_report_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    bad_report(std::string("not valid JSON: ") + e.what());
  }
  expect(doc, "report",
         {{"format_version", Kind::Integer},
          {"source", Kind::String},
          {"plan", Kind::Object},
          {"checks", Kind::Array},
          {"pass", Kind::Boolean},
          {"wall_seconds", Kind::Number}});
  if (doc.at("format_version").get<int>() != kReportFormatVersion) bad_report("unsupported format_version");
  expect(doc.at("plan"), "plan",
         {{"dims", Kind::Array},
          {"fields", Kind::Array},
          {"seeds", Kind::Integer},
          {"base_seed", Kind::Integer},
          {"components", Kind::Integer},
          {"samples", Kind::Integer},
          {"checks", Kind::Array},
          {"max_witnesses", Kind::Integer},
          {"tolerances", Kind::Object}});
  expect(doc.at("plan").at("tolerances"), "plan.tolerances",
         {{"rtol", Kind::Number},
          {"htol", Kind::Number},
          {"pdtol", Kind::Number},
          {"rktol", Kind::Number},
          {"residual", Kind::Number},
          {"margin", Kind::Number}});
  for (const auto& c : doc.at("checks")) {
    expect(c, "checks[]",
           {{"id", Kind::String},
            {"probe", Kind::Boolean},
            {"instances", Kind::Integer},
            {"evaluations", Kind::Integer},
            {"max_residual", Kind::NumberOrNull},
            {"min_margin", Kind::NumberOrNull},
            {"pass", Kind::Boolean},
            {"violations", Kind::Integer},
            {"witnesses", Kind::Array},
            {"stats", Kind::Object}});
    if (!check_from_string(c.at("id").get<std::string>())) bad_report("unknown check id");
    for (const auto& w : c.at("witnesses")) {
      expect(w, "witnesses[]",
             {{"field", Kind::String},
              {"dim", Kind::Integer},
              {"seed", Kind::Integer},
              {"frame", Kind::String},
              {"subset", Kind::Array},
              {"sample", Kind::IntegerOrNull},
              {"value", Kind::NumberOrNull}});
    }
  }
}

std::string report_summary(const RunReport& report) {
  std::ostringstream out;
  out << std::setprecision(3);
  for (const auto& c : report.checks) {
    const char* verdict = c.probe ? "PROBE" : (c.pass ? "PASS " : "FAIL ");
    out << verdict << ' ' << std::left << std::setw(18) << to_string(c.id) << std::right
        << " instances=" << c.instances << " evaluations=" << c.evaluations;
    if (c.max_residual) out << " max_residual=" << *c.max_residual;
    if (c.min_margin) out << " min_margin=" << *c.min_margin;
    if (c.probe || !c.pass) out << " violations=" << c.violations;
    for (const auto& [key, value] : c.stats) out << ' ' << key << '=' << value;
    out << '\n';
  }
  out << (report.pass ? "OVERALL PASS" : "OVERALL FAIL") << " (" << std::setprecision(3) << report.wall_seconds
      << " s)\n";
  return out.str();
}

}  // namespace framekit
