#include "framekit/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "framekit/errors.hpp"

namespace framekit {
namespace {

constexpr std::array kCatalog{
    CheckId::ThmT1,        CheckId::FamousParseval, CheckId::ThmTg1,          CheckId::Cor1Identity,
    CheckId::Cor1ThreeQuarters, CheckId::Cor2Sandwich, CheckId::ThmT33,       CheckId::Cor3Sandwich,
    CheckId::Cor34Sinv,    CheckId::Thm38I,         CheckId::Thm38II,         CheckId::Cor39Plus,
    CheckId::Cor39MinusProbe, CheckId::Eq4Recon,    CheckId::Eq5DualRecon,    CheckId::Eq6Quadform,
    CheckId::SpectrumRemark, CheckId::LemmaL0,      CheckId::LemmaL2,         CheckId::ThmFinalMi,
};

constexpr std::uint64_t kSampleStream = 0xF00DULL;
constexpr std::size_t kWitnessesPerCheck = 16;

/// Accumulates scaled residuals and margins, flagging the ones outside tolerance.
class Collector {
 public:
  Collector(CheckResult& result, const CheckTolerances& tol) : result_(result), tol_(tol) {}

  void residual(double value, const IndexSubset& subset = {}, std::optional<std::size_t> sample = {}) {
    result_.residuals.push_back(value);
    if (!(value <= tol_.residual)) flag(value, subset, sample);
  }

  void margin(double value, const IndexSubset& subset = {}, std::optional<std::size_t> sample = {}) {
    result_.margins.push_back(value);
    if (!(value >= -tol_.margin)) flag(value, subset, sample);
  }

  template <FieldScalar S>
  void identity(const ScalarIdentity<S>& id, double scale, const IndexSubset& subset, std::size_t sample) {
    residual(id.residual / scale, subset, sample);
    if constexpr (std::same_as<S, Complex>) residual(id.imag_residual / scale, subset, sample);
  }

  void loewner(const linops::LoewnerMargin& m, double scale, const IndexSubset& subset) {
    margin(m.lower_margin / scale, subset);
    margin(m.upper_margin / scale, subset);
  }

 private:
  void flag(double value, const IndexSubset& subset, std::optional<std::size_t> sample) {
    result_.pass = false;
    ++result_.violations;
    if (result_.witnesses.size() < kWitnessesPerCheck) {
      Witness w;
      w.subset = subset;
      w.sample = sample;
      w.value = value;
      result_.witnesses.push_back(std::move(w));
    }
  }

  CheckResult& result_;
  const CheckTolerances& tol_;
};

double f_scale(double squared_norm) {
  return std::max(1.0, squared_norm);
}

template <FieldScalar S>
Operator<S> scaled_identity(Eigen::Index n, double c) {
  return Operator<S>::Identity(n, n) * S(c);
}

/// Both sides of the g-fusion partial-sum identity, evaluated term by term.
template <FieldScalar S>
ScalarIdentity<S> thm_tg1_identity(const GFusionFrame<S>& frame, const DualGFusionFrame<S>& dual,
                                   const IndexSubset& subset, const Vector<S>& f) {
  Vector<S> s_in = Vector<S>::Zero(frame.dim());
  Vector<S> s_out = Vector<S>::Zero(frame.dim());
  S lhs{};
  S rhs{};
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const auto& c = frame.component(j);
    double w2 = c.weight * c.weight;
    Vector<S> dual_coeff = dual.lambda(j) * (dual.projection(j) * f);
    Vector<S> coeff = frame.restricted(j) * f;
    S pairing = S(w2) * linops::inner<S>(dual_coeff, coeff);
    Vector<S> term = w2 * (frame.projection(j) * (c.lambda.adjoint() * dual_coeff));
    if (subset.contains(j)) {
      lhs += pairing;
      s_in += term;
    } else {
      rhs += Eigen::numext::conj(pairing);
      s_out += term;
    }
  }
  return make_identity<S>(lhs - S(s_in.squaredNorm()), rhs - S(s_out.squaredNorm()));
}

/// sum_J v_j^2 |Lambda~_j pi_{W~_j} g|^2
template <FieldScalar S>
double dual_energy(const DualGFusionFrame<S>& dual, const Vector<S>& g) {
  double total = 0.0;
  for (std::size_t j = 0; j < dual.size(); ++j) {
    double w = dual.weight(j);
    total += w * w * (dual.lambda(j) * (dual.projection(j) * g)).squaredNorm();
  }
  return total;
}

void require_kind(CheckId id, FrameKind kind) {
  if (frame_kind(id) != kind) {
    throw FrameError(ErrorCode::WrongFrameKind, std::string(to_string(id)) + " runs on a " +
                                                    (frame_kind(id) == FrameKind::GFrame ? "g-frame" : "g-fusion frame"));
  }
}

}  // namespace

std::span<const CheckId> all_checks() {
  return kCatalog;
}

std::string_view to_string(CheckId id) {
  switch (id) {
    case CheckId::ThmT1: return "THM_T1";
    case CheckId::FamousParseval: return "FAMOUS_PARSEVAL";
    case CheckId::ThmTg1: return "THM_TG1";
    case CheckId::Cor1Identity: return "COR1_IDENTITY";
    case CheckId::Cor1ThreeQuarters: return "COR1_34BOUND";
    case CheckId::Cor2Sandwich: return "COR2_SANDWICH";
    case CheckId::ThmT33: return "THM_T33";
    case CheckId::Cor3Sandwich: return "COR3_SANDWICH";
    case CheckId::Cor34Sinv: return "COR_34_SINV";
    case CheckId::Thm38I: return "THM38_I";
    case CheckId::Thm38II: return "THM38_II";
    case CheckId::Cor39Plus: return "COR39_PLUS";
    case CheckId::Cor39MinusProbe: return "COR39_MINUS_PROBE";
    case CheckId::Eq4Recon: return "EQ4_RECON";
    case CheckId::Eq5DualRecon: return "EQ5_DUAL_RECON";
    case CheckId::Eq6Quadform: return "EQ6_QUADFORM";
    case CheckId::SpectrumRemark: return "SPECTRUM_REMARK";
    case CheckId::LemmaL0: return "LEMMA_L0";
    case CheckId::LemmaL2: return "LEMMA_L2";
    case CheckId::ThmFinalMi: return "THM_FINAL_MI";
  }
  return "UNKNOWN";
}

std::optional<CheckId> check_from_string(std::string_view name) {
  for (CheckId id : kCatalog) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

FrameKind frame_kind(CheckId id) {
  return id == CheckId::ThmT1 || id == CheckId::FamousParseval ? FrameKind::GFrame : FrameKind::GFusion;
}

bool requires_parseval(CheckId id) {
  switch (id) {
    case CheckId::FamousParseval:
    case CheckId::Cor1Identity:
    case CheckId::Cor1ThreeQuarters:
    case CheckId::Cor2Sandwich:
    case CheckId::Thm38I:
    case CheckId::Thm38II:
    case CheckId::SpectrumRemark:
      return true;
    default:
      return false;
  }
}

bool is_probe(CheckId id) {
  return id == CheckId::Cor39MinusProbe;
}

template <FieldScalar S>
CheckResult run_check(CheckId id, const GFrame<S>& frame, std::span<const IndexSubset> subsets,
                      std::span<const Vector<S>> samples, const CheckTolerances& tol) {
  require_kind(id, FrameKind::GFrame);
  if (requires_parseval(id) && !frame.is_parseval()) {
    throw FrameError(ErrorCode::WrongFrameKind, std::string(to_string(id)) + " needs a Parseval g-frame");
  }
  CheckResult result;
  result.id = id;
  Collector out(result, tol);
  for (const auto& subset : subsets) {
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& f = samples[k];
      auto identity = id == CheckId::ThmT1 ? thm_t1_residual<S>(frame, subset, f)
                                           : famous_parseval_residual<S>(frame, subset, f);
      out.identity(identity, f_scale(f.squaredNorm()), subset, k);
    }
  }
  return result;
}

template <FieldScalar S>
CheckResult run_check(CheckId id, const GFusionFrame<S>& frame, std::span<const IndexSubset> subsets,
                      std::span<const Vector<S>> samples, const CheckTolerances& tol) {
  require_kind(id, FrameKind::GFusion);
  if (requires_parseval(id) && !frame.is_parseval()) {
    throw FrameError(ErrorCode::WrongFrameKind, std::string(to_string(id)) + " needs a Parseval g-fusion frame");
  }
  CheckResult result;
  result.id = id;
  Collector out(result, tol);

  const auto n = frame.size();
  const auto dim = frame.dim();
  const auto& numeric = frame.tolerances();
  const auto& s = frame.frame_operator();
  const auto& s_inv = frame.inverse_frame_operator();
  const auto& s_inv_sqrt = frame.inverse_sqrt_frame_operator();
  const double s_scale = std::max(1.0, frame.upper_bound());
  const auto dual = gf_canonical_dual<S>(frame);
  const Operator<S> zero = Operator<S>::Zero(dim, dim);

  auto for_each_pair = [&](auto&& body) {
    for (const auto& subset : subsets) {
      subset.validate(n);
      IndexSubset rest = subset.complement(n);
      for (std::size_t k = 0; k < samples.size(); ++k) body(subset, rest, k, samples[k]);
    }
  };
  auto for_each_subset = [&](auto&& body) {
    for (const auto& subset : subsets) {
      subset.validate(n);
      body(subset, subset.complement(n));
    }
  };

  switch (id) {
    case CheckId::ThmTg1:
      for_each_pair([&](const IndexSubset& in, const IndexSubset&, std::size_t k, const Vector<S>& f) {
        out.identity(thm_tg1_identity<S>(frame, dual, in, f), f_scale(f.squaredNorm()), in, k);
      });
      break;

    case CheckId::Cor1Identity:
      for_each_pair([&](const IndexSubset& in, const IndexSubset& rest, std::size_t k, const Vector<S>& f) {
        double lhs = partial_energy<S>(frame, in, f) - (m_partial<S>(frame, in) * f).squaredNorm();
        double rhs = partial_energy<S>(frame, rest, f) - (m_partial<S>(frame, rest) * f).squaredNorm();
        out.residual(std::abs(lhs - rhs) / f_scale(f.squaredNorm()), in, k);
      });
      break;

    case CheckId::Cor1ThreeQuarters: {
      const double bound = linops::quad_bound(1.0, -1.0, 1.0);
      for_each_pair([&](const IndexSubset& in, const IndexSubset& rest, std::size_t k, const Vector<S>& f) {
        double value = partial_energy<S>(frame, in, f) + (m_partial<S>(frame, rest) * f).squaredNorm();
        double margin = value - bound * f.squaredNorm();
        out.margin(margin / (f_scale(f.squaredNorm()) * s_scale), in, k);
      });
      break;
    }

    case CheckId::Cor2Sandwich: {
      const double quarter = linops::quad_bound(-1.0, 1.0, 0.0);
      for_each_subset([&](const IndexSubset& in, const IndexSubset&) {
        Operator<S> s_in = s_partial<S>(frame, dual, in);
        Operator<S> gap = s_in - s_in * s_in;
        out.loewner(linops::loewner_check<S>(gap, zero, scaled_identity<S>(dim, quarter), numeric), s_scale, in);
      });
      break;
    }

    case CheckId::Thm38I: {
      const double quarter = linops::quad_bound(-1.0, 1.0, 0.0);
      for_each_subset([&](const IndexSubset& in, const IndexSubset& rest) {
        Operator<S> s_in = s_partial<S>(frame, dual, in);
        Operator<S> s_out = s_partial<S>(frame, dual, rest);
        Operator<S> product = s_in * s_out;
        out.residual(linops::norm<S>(product - s_out * s_in) / s_scale, in);
        out.residual(linops::norm<S>(product - (s_in - s_in * s_in)) / s_scale, in);
        out.loewner(linops::loewner_check<S>(product, zero, scaled_identity<S>(dim, quarter), numeric), s_scale, in);
      });
      break;
    }

    case CheckId::Thm38II: {
      const double half = linops::quad_bound(2.0, -2.0, 1.0);
      for_each_subset([&](const IndexSubset& in, const IndexSubset& rest) {
        Operator<S> s_in = s_partial<S>(frame, dual, in);
        Operator<S> s_out = s_partial<S>(frame, dual, rest);
        Operator<S> sum = s_in * s_in + s_out * s_out;
        out.loewner(linops::loewner_check<S>(sum, scaled_identity<S>(dim, half), scaled_identity<S>(dim, 1.5),
                                             numeric),
                    s_scale, in);
      });
      break;
    }

    case CheckId::SpectrumRemark: {
      double radius = 0.0;
      for_each_subset([&](const IndexSubset& in, const IndexSubset&) {
        RealVector eig = linops::eigenvalues<S>(s_partial<S>(frame, dual, in), numeric);
        double lo = eig(0);
        double hi = eig(eig.size() - 1);
        radius = std::max({radius, std::abs(lo), std::abs(hi)});
        out.margin(lo / s_scale, in);
        out.margin((1.0 - hi) / s_scale, in);
      });
      result.stats["max_spectral_radius"] = radius;
      break;
    }

    case CheckId::ThmT33:
      for_each_pair([&](const IndexSubset& in, const IndexSubset& rest, std::size_t k, const Vector<S>& f) {
        double lhs = partial_energy<S>(frame, in, f) + (s_inv_sqrt * (m_partial<S>(frame, rest) * f)).squaredNorm();
        double rhs = partial_energy<S>(frame, rest, f) + (s_inv_sqrt * (m_partial<S>(frame, in) * f)).squaredNorm();
        out.residual(std::abs(lhs - rhs) / f_scale(f.squaredNorm()), in, k);
      });
      break;

    case CheckId::Cor3Sandwich: {
      const double quarter = linops::quad_bound(-1.0, 1.0, 0.0);
      for_each_subset([&](const IndexSubset& in, const IndexSubset&) {
        Operator<S> m_in = m_partial<S>(frame, in);
        Operator<S> gap = m_in - m_in * s_inv * m_in;
        Operator<S> upper = S(quarter) * s;
        out.loewner(linops::loewner_check<S>(gap, zero, upper, numeric), s_scale, in);
      });
      break;
    }

    case CheckId::Cor34Sinv: {
      const double bound = linops::quad_bound(1.0, -1.0, 1.0) / linops::norm<S>(s_inv);
      for_each_pair([&](const IndexSubset& in, const IndexSubset& rest, std::size_t k, const Vector<S>& f) {
        double value = partial_energy<S>(frame, in, f) + (s_inv_sqrt * (m_partial<S>(frame, rest) * f)).squaredNorm();
        double margin = value - bound * f.squaredNorm();
        out.margin(margin / (f_scale(f.squaredNorm()) * s_scale), in, k);
      });
      break;
    }

    case CheckId::Cor39Plus:
    case CheckId::Cor39MinusProbe: {
      const double sign = id == CheckId::Cor39Plus ? 1.0 : -1.0;
      for_each_subset([&](const IndexSubset& in, const IndexSubset& rest) {
        Operator<S> m_in = m_partial<S>(frame, in);
        Operator<S> m_out = m_partial<S>(frame, rest);
        Operator<S> middle = m_in * s_inv * m_in + S(sign) * (m_out * s_inv * m_out);
        Operator<S> lower = S(0.5) * s;
        Operator<S> upper = S(1.5) * s;
        out.loewner(linops::loewner_check<S>(middle, lower, upper, numeric), s_scale, in);
      });
      break;
    }

    case CheckId::Eq4Recon:
      for (std::size_t k = 0; k < samples.size(); ++k) {
        auto err = frame_operator_reconstruction_errors<S>(frame, samples[k]);
        out.residual(err.first, {}, k);
        out.residual(err.second, {}, k);
      }
      break;

    case CheckId::Eq5DualRecon: {
      for (std::size_t k = 0; k < samples.size(); ++k) {
        auto err = dual_reconstruction_errors<S>(frame, dual, samples[k]);
        out.residual(err.first, {}, k);
        out.residual(err.second, {}, k);
      }
      // The dual triple is a g-fusion frame with operator S^{-1}, bounded by 1/B and 1/A.
      const double inv_scale = std::max(1.0, 1.0 / frame.lower_bound());
      out.residual(linops::norm<S>(dual.frame().frame_operator() - s_inv) / inv_scale);
      out.loewner(linops::loewner_check<S>(s_inv, scaled_identity<S>(dim, 1.0 / frame.upper_bound()),
                                           scaled_identity<S>(dim, 1.0 / frame.lower_bound()), numeric),
                  inv_scale, {});
      break;
    }

    case CheckId::Eq6Quadform:
      for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& f = samples[k];
        out.residual(inverse_quadratic_residual<S>(frame, dual, f) / f_scale(f.squaredNorm()), {}, k);
      }
      break;

    case CheckId::LemmaL0: {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& basis = frame.component(j).basis;
        IndexSubset which({j});
        out.residual(linops::lemma_l0_residual<S>(basis, s_inv, numeric) / linops::norm<S>(s_inv), which);
        out.residual(linops::lemma_l0_residual<S>(basis, s_inv_sqrt, numeric) / linops::norm<S>(s_inv_sqrt), which);
        out.residual(linops::lemma_l0_residual<S>(basis, s, numeric) / linops::norm<S>(s), which);
      }
      out.residual(dual_subspace_residual<S>(frame, dual) / std::max(1.0, linops::norm<S>(s_inv)));
      break;
    }

    case CheckId::LemmaL2:
      for_each_subset([&](const IndexSubset& in, const IndexSubset& rest) {
        Operator<S> u = s_partial<S>(frame, dual, in);
        Operator<S> v = s_partial<S>(frame, dual, rest);
        double scale = std::max({1.0, linops::norm<S>(u), linops::norm<S>(v)});
        out.residual(linops::norm<S>(Operator<S>(u + v - linops::identity<S>(dim))) / scale, in);
        out.residual(linops::lemma_l2_residual<S>(u, v) / (scale * scale), in);
      });
      break;

    case CheckId::ThmFinalMi:
      for_each_pair([&](const IndexSubset& in, const IndexSubset& rest, std::size_t k, const Vector<S>& f) {
        double lhs = partial_energy<S>(frame, in, f) - dual_energy<S>(dual, m_partial<S>(frame, in) * f);
        double rhs = partial_energy<S>(frame, rest, f) - dual_energy<S>(dual, m_partial<S>(frame, rest) * f);
        out.residual(std::abs(lhs - rhs) / f_scale(f.squaredNorm()), in, k);
      });
      break;

    case CheckId::ThmT1:
    case CheckId::FamousParseval:
      break;  // rejected by require_kind
  }
  return result;
}

void SuitePlan::validate() const {
  auto fail = [](const std::string& what) { throw FrameError(ErrorCode::InvalidConfig, what); };
  if (dims.empty()) fail("no dimensions selected");
  for (auto d : dims) {
    if (d < 1 || d > 64) fail("dimensions must lie in [1, 64]");
  }
  if (fields.empty()) fail("no field selected");
  if (seeds < 1) fail("at least one seed is required");
  if (components < 1 || components > 64) fail("components must lie in [1, 64]");
  if (samples < 1) fail("at least one sample vector is required");
  if (checks.empty()) fail("no checks selected");
  const auto& t = tolerances;
  for (double v : {t.numeric.rtol, t.numeric.htol, t.numeric.pdtol, t.numeric.rktol, t.check.residual,
                   t.check.margin}) {
    if (!(v >= 0.0) || !std::isfinite(v)) fail("tolerances must be finite and non-negative");
  }
}

std::vector<ComponentSpec> suite_components(std::int64_t dim, std::size_t n) {
  const auto count = static_cast<std::int64_t>(n);
  std::int64_t k = std::clamp<std::int64_t>((2 * dim + count - 1) / count, 1, dim);
  std::vector<ComponentSpec> out;
  for (std::size_t j = 0; j < n; ++j) {
    out.push_back({k, k + static_cast<std::int64_t>(j % 2), 0.5, 2.0});
  }
  return out;
}

const CheckSummary* RunReport::find(CheckId id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

struct InstanceLabel {
  Field field;
  std::int64_t dim;
  std::uint64_t seed;
};

/// Frames one verification instance runs against. Optional members are absent
/// when the source cannot provide them (e.g. a non-Parseval frame file).
template <FieldScalar S>
struct Bundle {
  const GFrame<S>* gframe = nullptr;
  const GFrame<S>* parseval_gframe = nullptr;
  const GFusionFrame<S>* gfusion = nullptr;
  const GFusionFrame<S>* parseval_gfusion = nullptr;
  std::string gframe_label = "gframe";
  std::string parseval_gframe_label = "parseval_gframe";
  std::string gfusion_label = "gfusion";
  std::string parseval_gfusion_label = "parseval_gfusion";
};

class Aggregator {
 public:
  Aggregator(const SuitePlan& plan) : plan_(plan) {
    for (CheckId id : plan.checks) {
      if (index_of(id) == summaries_.size()) {
        CheckSummary s;
        s.id = id;
        s.probe = is_probe(id);
        summaries_.push_back(std::move(s));
      }
    }
    std::sort(summaries_.begin(), summaries_.end(), [](const CheckSummary& a, const CheckSummary& b) {
      return catalog_position(a.id) < catalog_position(b.id);
    });
  }

  void merge(CheckResult&& result, const InstanceLabel& label, const std::string& frame) {
    auto& s = summaries_[index_of(result.id)];
    ++s.instances;
    s.evaluations += result.residuals.size() + result.margins.size();
    for (double r : result.residuals) s.max_residual = s.max_residual ? std::max(*s.max_residual, r) : r;
    for (double m : result.margins) s.min_margin = s.min_margin ? std::min(*s.min_margin, m) : m;
    s.pass = s.pass && result.pass;
    s.violations += result.violations;
    for (auto& w : result.witnesses) {
      if (s.witnesses.size() >= plan_.max_witnesses) break;
      w.field = std::string(to_string(label.field));
      w.dim = label.dim;
      w.seed = label.seed;
      w.frame = frame;
      s.witnesses.push_back(std::move(w));
    }
    for (const auto& [key, value] : result.stats) {
      auto it = s.stats.find(key);
      if (it == s.stats.end()) s.stats.emplace(key, value);
      else it->second = std::max(it->second, value);
    }
  }

  std::vector<CheckSummary> take() { return std::move(summaries_); }

 private:
  static std::size_t catalog_position(CheckId id) {
    return static_cast<std::size_t>(std::find(kCatalog.begin(), kCatalog.end(), id) - kCatalog.begin());
  }

  std::size_t index_of(CheckId id) const {
    for (std::size_t i = 0; i < summaries_.size(); ++i) {
      if (summaries_[i].id == id) return i;
    }
    return summaries_.size();
  }

  const SuitePlan& plan_;
  std::vector<CheckSummary> summaries_;
};

template <FieldScalar S>
void run_bundle(const Bundle<S>& bundle, const InstanceLabel& label, const SuitePlan& plan,
                std::span<const Vector<S>> samples, bool skip_inapplicable, Aggregator& agg) {
  for (CheckId id : plan.checks) {
    const bool parseval = requires_parseval(id);
    if (frame_kind(id) == FrameKind::GFrame) {
      const GFrame<S>* frame = parseval ? bundle.parseval_gframe : bundle.gframe;
      const std::string& name = parseval ? bundle.parseval_gframe_label : bundle.gframe_label;
      if (frame == nullptr) {
        if (skip_inapplicable) continue;
        throw FrameError(ErrorCode::WrongFrameKind, std::string(to_string(id)) + " needs a Parseval frame");
      }
      auto subsets = enumerate_subsets(frame->size(), label.seed);
      agg.merge(run_check<S>(id, *frame, subsets, samples, plan.tolerances.check), label, name);
    } else {
      const GFusionFrame<S>* frame = parseval ? bundle.parseval_gfusion : bundle.gfusion;
      const std::string& name = parseval ? bundle.parseval_gfusion_label : bundle.gfusion_label;
      if (frame == nullptr) {
        if (skip_inapplicable) continue;
        throw FrameError(ErrorCode::WrongFrameKind, std::string(to_string(id)) + " needs a Parseval frame");
      }
      auto subsets = enumerate_subsets(frame->size(), label.seed);
      agg.merge(run_check<S>(id, *frame, subsets, samples, plan.tolerances.check), label, name);
    }
  }
}

template <FieldScalar S>
std::vector<Vector<S>> sample_vectors(Eigen::Index dim, std::size_t count, std::uint64_t seed) {
  Rng rng(seed, kSampleStream);
  std::vector<Vector<S>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(rng.vector<S>(dim));
  return out;
}

template <FieldScalar S>
void run_generated(const SuitePlan& plan, Aggregator& agg) {
  for (std::int64_t dim : plan.dims) {
    auto specs = suite_components(dim, plan.components);
    std::vector<Eigen::Index> codims;
    for (const auto& c : specs) codims.push_back(c.codomain_dim);
    for (std::uint64_t k = 0; k < plan.seeds; ++k) {
      const std::uint64_t seed = plan.base_seed + k;
      GenSpec spec{dim, specs, field_of<S>, seed};
      const auto& tol = plan.tolerances.numeric;
      GFrame<S> gframe = random_gframe<S>(dim, codims, seed, tol);
      GFrame<S> parseval_gframe = random_parseval_gframe<S>(dim, codims, seed, tol);
      GFusionFrame<S> gfusion = random_gfusion<S>(spec, tol);
      GFusionFrame<S> parseval_gfusion = parsevalize<S>(gfusion);
      Bundle<S> bundle{&gframe, &parseval_gframe, &gfusion, &parseval_gfusion};
      auto samples = sample_vectors<S>(dim, plan.samples, seed);
      run_bundle<S>(bundle, {field_of<S>, dim, seed}, plan, samples, false, agg);
    }
  }
}

RunReport finish(const SuitePlan& plan, Aggregator& agg, std::chrono::steady_clock::time_point start) {
  RunReport report;
  report.plan = plan;
  report.checks = agg.take();
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckSummary& c) { return c.probe || c.pass; });
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

RunReport run_suite(const SuitePlan& plan) {
  plan.validate();
  auto start = std::chrono::steady_clock::now();
  Aggregator agg(plan);
  for (Field field : plan.fields) {
    if (field == Field::Real) run_generated<Real>(plan, agg);
    else run_generated<Complex>(plan, agg);
  }
  return finish(plan, agg, start);
}

template <FieldScalar S>
RunReport run_on_frame(const GFusionFrame<S>& frame, const SuitePlan& plan, bool skip_inapplicable) {
  plan.validate();
  auto start = std::chrono::steady_clock::now();
  Aggregator agg(plan);
  GFrame<S> induced = as_gframe<S>(frame);
  const bool parseval = frame.is_parseval();
  Bundle<S> bundle{&induced, parseval ? &induced : nullptr, &frame, parseval ? &frame : nullptr,
                   "induced_gframe", "induced_gframe", "file", "file"};
  auto samples = sample_vectors<S>(frame.dim(), plan.samples, plan.base_seed);
  run_bundle<S>(bundle, {field_of<S>, frame.dim(), plan.base_seed}, plan, samples, skip_inapplicable, agg);
  return finish(plan, agg, start);
}

template <FieldScalar S>
RunReport run_on_frame(const GFrame<S>& frame, const SuitePlan& plan, bool skip_inapplicable) {
  plan.validate();
  auto start = std::chrono::steady_clock::now();
  Aggregator agg(plan);
  GFusionFrame<S> view = as_gfusion<S>(frame);
  const bool parseval = frame.is_parseval();
  Bundle<S> bundle{&frame, parseval ? &frame : nullptr, &view, parseval ? &view : nullptr,
                   "file", "file", "full_space_view", "full_space_view"};
  auto samples = sample_vectors<S>(frame.dim(), plan.samples, plan.base_seed);
  run_bundle<S>(bundle, {field_of<S>, frame.dim(), plan.base_seed}, plan, samples, skip_inapplicable, agg);
  return finish(plan, agg, start);
}

#define FRAMEKIT_INSTANTIATE_VERIFY(S)                                                                       \
  template CheckResult run_check<S>(CheckId, const GFrame<S>&, std::span<const IndexSubset>,                 \
                                    std::span<const Vector<S>>, const CheckTolerances&);                     \
  template CheckResult run_check<S>(CheckId, const GFusionFrame<S>&, std::span<const IndexSubset>,           \
                                    std::span<const Vector<S>>, const CheckTolerances&);                     \
  template RunReport run_on_frame<S>(const GFusionFrame<S>&, const SuitePlan&, bool);                        \
  template RunReport run_on_frame<S>(const GFrame<S>&, const SuitePlan&, bool);

FRAMEKIT_INSTANTIATE_VERIFY(Real)
FRAMEKIT_INSTANTIATE_VERIFY(Complex)

#undef FRAMEKIT_INSTANTIATE_VERIFY

}  // namespace framekit
