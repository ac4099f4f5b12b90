// framekit: generate g-fusion frames, run the verification catalog, and demo
// reconstruction from the command line.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "framekit/errors.hpp"
#include "framekit/frame_file.hpp"
#include "framekit/gen.hpp"
#include "framekit/report.hpp"
#include "framekit/verify.hpp"

namespace fk = framekit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (!token.empty()) out.push_back(token);
    }
  }
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw fk::FrameError(fk::ErrorCode::InvalidConfig, "bad " + what + " '" + text + "'");
  }
  return v;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  double v = parse_double(text, what);
  if (v != std::floor(v)) throw fk::FrameError(fk::ErrorCode::InvalidConfig, "bad " + what + " '" + text + "'");
  return static_cast<std::int64_t>(v);
}

/// "subspace:codomain:weight" with weight either "w" or "lo..hi"; a single
/// bare integer n stands for the suite layout with n components.
std::vector<fk::ComponentSpec> parse_components(const std::vector<std::string>& tokens, std::int64_t dim) {
  auto items = split_list(tokens);
  if (items.size() == 1 && items[0].find(':') == std::string::npos) {
    auto n = parse_int(items[0], "component count");
    if (n < 1) throw fk::FrameError(fk::ErrorCode::InvalidConfig, "component count must be >= 1");
    return fk::suite_components(dim, static_cast<std::size_t>(n));
  }
  std::vector<fk::ComponentSpec> out;
  for (const auto& item : items) {
    auto first = item.find(':');
    auto second = first == std::string::npos ? std::string::npos : item.find(':', first + 1);
    if (second == std::string::npos) {
      throw fk::FrameError(fk::ErrorCode::InvalidConfig, "component '" + item + "' is not dim:codim:weight");
    }
    fk::ComponentSpec c;
    c.subspace_dim = parse_int(item.substr(0, first), "subspace dim");
    c.codomain_dim = parse_int(item.substr(first + 1, second - first - 1), "codomain dim");
    std::string weight = item.substr(second + 1);
    auto dots = weight.find("..");
    if (dots == std::string::npos) {
      c.weight_lo = c.weight_hi = parse_double(weight, "weight");
    } else {
      c.weight_lo = parse_double(weight.substr(0, dots), "weight");
      c.weight_hi = parse_double(weight.substr(dots + 2), "weight");
    }
    out.push_back(c);
  }
  return out;
}

fk::AnyFrame generate(const fk::GenSpec& spec, bool parseval, const fk::Tolerances& tol) {
  if (spec.field == fk::Field::Real) {
    return parseval ? fk::AnyFrame(fk::random_parseval_gfusion<fk::Real>(spec, tol))
                    : fk::AnyFrame(fk::random_gfusion<fk::Real>(spec, tol));
  }
  return parseval ? fk::AnyFrame(fk::random_parseval_gfusion<fk::Complex>(spec, tol))
                  : fk::AnyFrame(fk::random_gfusion<fk::Complex>(spec, tol));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw fk::FrameError(fk::ErrorCode::InvalidConfig, "cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::vector<std::string> dims{"2,3,5,8"};
  std::string field = "both";
  std::int64_t seeds = 10;
  std::int64_t base_seed = 1;
  std::int64_t components = 4;
  std::int64_t samples = 8;
  std::vector<std::string> checks{"all"};
  std::optional<double> tol_residual;
  std::optional<double> tol_margin;
  std::string report;
  std::string format = "json";
  std::string frame;
};

fk::SuitePlan build_plan(const VerifyOptions& o, bool& explicit_checks) {
  fk::SuitePlan plan;
  plan.tolerances = fk::tolerances_from_environment();
  plan.dims.clear();
  for (const auto& d : split_list(o.dims)) plan.dims.push_back(parse_int(d, "dimension"));
  if (o.field == "both") plan.fields = {fk::Field::Real, fk::Field::Complex};
  else plan.fields = {fk::field_from_string(o.field)};
  if (o.seeds < 1 || o.base_seed < 0 || o.components < 1 || o.samples < 1) {
    throw fk::FrameError(fk::ErrorCode::InvalidConfig, "counts must be positive");
  }
  plan.seeds = static_cast<std::uint64_t>(o.seeds);
  plan.base_seed = static_cast<std::uint64_t>(o.base_seed);
  plan.components = static_cast<std::size_t>(o.components);
  plan.samples = static_cast<std::size_t>(o.samples);
  auto names = split_list(o.checks);
  explicit_checks = !(names.size() == 1 && (names[0] == "all" || names[0] == "ALL"));
  if (explicit_checks) {
    plan.checks.clear();
    for (const auto& name : names) {
      auto id = fk::check_from_string(name);
      if (!id) throw fk::FrameError(fk::ErrorCode::InvalidConfig, "unknown check '" + name + "'");
      plan.checks.push_back(*id);
    }
  }
  if (o.tol_residual) plan.tolerances.check.residual = *o.tol_residual;
  if (o.tol_margin) plan.tolerances.check.margin = *o.tol_margin;
  if (o.format != "json" && o.format != "csv") {
    throw fk::FrameError(fk::ErrorCode::InvalidConfig, "format must be json or csv");
  }
  plan.validate();
  return plan;
}

int cmd_verify(const VerifyOptions& o) {
  bool explicit_checks = false;
  fk::SuitePlan plan = build_plan(o, explicit_checks);
  fk::RunReport report;
  if (o.frame.empty()) {
    report = fk::run_suite(plan);
  } else {
    auto frame = fk::load_frame(o.frame, plan.tolerances.numeric);
    report = std::visit([&](const auto& f) { return fk::run_on_frame(f, plan, !explicit_checks); }, frame);
    report.source = o.frame;
  }
  std::cout << fk::report_summary(report);
  if (!o.report.empty()) {
    write_text(o.report, o.format == "csv" ? fk::report_to_csv(report) : fk::report_to_json(report));
  }
  return report.pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::int64_t dim = 0;
  std::vector<std::string> components;
  std::string field = "complex";
  std::int64_t seed = 0;
  bool parseval = false;
  std::string out;
};

int cmd_gen(const GenOptions& o) {
  auto tol = fk::tolerances_from_environment().numeric;
  if (o.seed < 0) throw fk::FrameError(fk::ErrorCode::InvalidConfig, "seed must be non-negative");
  fk::GenSpec spec{o.dim, parse_components(o.components, o.dim), fk::field_from_string(o.field),
                   static_cast<std::uint64_t>(o.seed)};
  spec.validate();
  fk::AnyFrame frame = generate(spec, o.parseval, tol);
  write_text(o.out, fk::serialize_frame(frame));
  return kExitPass;
}

// ---------------------------------------------------------------- demo-reconstruct

struct DemoOptions {
  std::string frame;
  bool random = false;
  std::int64_t dim = 4;
  std::vector<std::string> components{"3"};
  std::string field = "complex";
  std::int64_t seed = 0;
  std::vector<std::string> vector;
  bool random_vector = false;
  std::int64_t vector_seed = 1;
  double tol = 1e-9;
};

template <fk::FieldScalar S>
std::string format_vector(const fk::Vector<S>& v) {
  std::ostringstream out;
  out << std::setprecision(10) << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    if constexpr (std::same_as<S, fk::Real>) {
      out << v(i);
    } else {
      out << v(i).real() << (v(i).imag() < 0 ? "-" : "+") << std::abs(v(i).imag()) << 'i';
    }
  }
  return out.str() + ']';
}

template <fk::FieldScalar S>
int demo(const fk::GFusionFrame<S>& frame, const DemoOptions& o) {
  fk::Vector<S> f;
  if (o.random_vector || o.vector.empty()) {
    fk::Rng rng(static_cast<std::uint64_t>(o.vector_seed));
    f = rng.vector<S>(frame.dim());
  } else {
    auto coords = split_list(o.vector);
    if (static_cast<Eigen::Index>(coords.size()) != frame.dim()) {
      throw fk::FrameError(fk::ErrorCode::InvalidConfig, "vector needs " + std::to_string(frame.dim()) + " coordinates");
    }
    f.resize(frame.dim());
    for (Eigen::Index i = 0; i < frame.dim(); ++i) f(i) = S(parse_double(coords[static_cast<std::size_t>(i)], "coordinate"));
  }
  const auto& inv = frame.inverse_frame_operator();
  auto dual = fk::gf_canonical_dual<S>(frame);

  fk::Vector<S> via_operator = fk::Vector<S>::Zero(frame.dim());
  fk::Vector<S> via_dual = fk::Vector<S>::Zero(frame.dim());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const auto& c = frame.component(j);
    double w2 = c.weight * c.weight;
    via_operator += w2 * (frame.restricted(j).adjoint() * (frame.restricted(j) * (inv * f)));
    via_dual += w2 * (frame.projection(j) * (c.lambda.adjoint() * (dual.lambda(j) * (dual.projection(j) * f))));
  }
  double scale = std::max(f.norm(), std::numeric_limits<double>::min());
  double err_operator = (via_operator - f).norm() / scale;
  double err_dual = (via_dual - f).norm() / scale;

  std::cout << "f                     = " << format_vector<S>(f) << '\n'
            << "frame-operator recon  = " << format_vector<S>(via_operator) << '\n'
            << "canonical-dual recon  = " << format_vector<S>(via_dual) << '\n'
            << std::setprecision(3) << "relative error (S^-1) = " << err_operator << '\n'
            << "relative error (dual) = " << err_dual << '\n';
  bool ok = err_operator <= o.tol && err_dual <= o.tol;
  std::cout << (ok ? "OK" : "FAILED") << " (tolerance " << o.tol << ")\n";
  return ok ? kExitPass : kExitFail;
}

int cmd_demo(const DemoOptions& o) {
  auto tol = fk::tolerances_from_environment().numeric;
  fk::AnyFrame frame = [&]() -> fk::AnyFrame {
    if (!o.frame.empty()) return fk::load_frame(o.frame, tol);
    if (o.seed < 0) throw fk::FrameError(fk::ErrorCode::InvalidConfig, "seed must be non-negative");
    fk::GenSpec spec{o.dim, parse_components(o.components, o.dim), fk::field_from_string(o.field),
                     static_cast<std::uint64_t>(o.seed)};
    return generate(spec, false, tol);
  }();
  return std::visit(
      [&](const auto& f) -> int {
        using F = std::decay_t<decltype(f)>;
        using S = typename std::decay_t<decltype(f.frame_operator())>::Scalar;
        if constexpr (std::same_as<F, fk::GFrame<S>>) {
          return demo<S>(fk::as_gfusion<S>(f), o);
        } else {
          return demo<S>(f, o);
        }
      },
      frame);
}

int exit_code_for(const fk::FrameError& e, bool generation_is_failure) {
  if (e.code() == fk::ErrorCode::GenerationFailed && generation_is_failure) return kExitFail;
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"framekit: g-frame and g-fusion frame construction and identity verification"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the verification catalog over seeded frames or a frame file");
  verify->add_option("--dims", vo.dims, "Dimensions of H (comma separated)")->delimiter(',');
  verify->add_option("--field", vo.field, "real, complex or both");
  verify->add_option("--seeds", vo.seeds, "Number of seeds per dimension and field");
  verify->add_option("--base-seed", vo.base_seed, "First seed");
  verify->add_option("--components", vo.components, "Components per generated frame");
  verify->add_option("--samples", vo.samples, "Sample vectors per instance");
  verify->add_option("--checks", vo.checks, "Check ids or 'all'")->delimiter(',');
  verify->add_option("--tol-residual", vo.tol_residual, "Residual tolerance");
  verify->add_option("--tol-margin", vo.tol_margin, "Loewner margin tolerance");
  verify->add_option("--report", vo.report, "Write the report to this path");
  verify->add_option("--format", vo.format, "Report format: json or csv");
  verify->add_option("--frame", vo.frame, "Verify a frame file instead of generated frames");

  GenOptions go;
  auto* gen = app.add_subcommand("gen", "Generate a random g-fusion frame file");
  gen->add_option("--dim", go.dim, "Dimension of H")->required();
  gen->add_option("--components", go.components, "Components as subspace:codomain:weight")->required();
  gen->add_option("--field", go.field, "real or complex");
  gen->add_option("--seed", go.seed, "Generator seed");
  gen->add_flag("--parseval", go.parseval, "Parsevalize the generated frame");
  gen->add_option("--out", go.out, "Output path (stdout when omitted)");

  DemoOptions dopt;
  auto* demo_cmd = app.add_subcommand("demo-reconstruct", "Reconstruct a vector through S^-1 and the canonical dual");
  auto* frame_opt = demo_cmd->add_option("--frame", dopt.frame, "Frame file");
  auto* random_opt = demo_cmd->add_flag("--random", dopt.random, "Use a generated frame");
  frame_opt->excludes(random_opt);
  demo_cmd->add_option("--dim", dopt.dim, "Dimension of H for --random");
  demo_cmd->add_option("--components", dopt.components, "Component count or subspace:codomain:weight list");
  demo_cmd->add_option("--field", dopt.field, "real or complex");
  demo_cmd->add_option("--seed", dopt.seed, "Frame generator seed");
  demo_cmd->add_option("--vector", dopt.vector, "Coordinates of f")->delimiter(',');
  demo_cmd->add_flag("--random-vector", dopt.random_vector, "Draw f from --vector-seed");
  demo_cmd->add_option("--vector-seed", dopt.vector_seed, "Seed for the random vector");
  demo_cmd->add_option("--tol", dopt.tol, "Relative error tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (verify->parsed()) return cmd_verify(vo);
    if (gen->parsed()) return cmd_gen(go);
    if (demo_cmd->parsed()) {
      if (dopt.frame.empty() && !dopt.random) {
        std::cerr << "demo-reconstruct: give --frame <path> or --random\n";
        return kExitConfig;
      }
      return cmd_demo(dopt);
    }
  } catch (const fk::FrameError& e) {
    std::cerr << "framekit: " << e.what() << '\n';
    return exit_code_for(e, gen->parsed());
  } catch (const std::exception& e) {
    std::cerr << "framekit: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
