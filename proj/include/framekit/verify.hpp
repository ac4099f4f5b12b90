#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "framekit/gen.hpp"
#include "framekit/tolerance.hpp"

namespace framekit {

/// One entry per identity or inequality that the catalog machine-checks.
enum class CheckId {
  ThmT1,             // g-frame partial-sum identity with the canonical dual
  FamousParseval,    // its Parseval g-frame form
  ThmTg1,            // g-fusion partial-sum identity
  Cor1Identity,      // Parseval g-fusion energy identity
  Cor1ThreeQuarters, // sum_I energy + |M_{I^c} f|^2 >= 3/4 |f|^2
  Cor2Sandwich,      // 0 <= S_I - S_I^2 <= 1/4 id
  ThmT33,            // norm identity through S^{-1/2}
  Cor3Sandwich,      // 0 <= M_I - M_I S^{-1} M_I <= 1/4 S
  Cor34Sinv,         // lower bound 3/4 |S^{-1}|^{-1} |f|^2
  Thm38I,            // 0 <= S_I - S_I^2 <= 1/4 id, via the commuting product
  Thm38II,           // 1/2 id <= S_I^2 + S_{I^c}^2 <= 3/2 id
  Cor39Plus,         // 1/2 S <= M_I S^{-1} M_I + M_c S^{-1} M_c <= 3/2 S
  Cor39MinusProbe,   // the same sandwich with a minus sign; probed, not asserted
  Eq4Recon,          // reconstruction through S^{-1}
  Eq5DualRecon,      // reconstruction through the canonical dual
  Eq6Quadform,       // <S^{-1} f, f> as a dual energy
  SpectrumRemark,    // spectrum of S_I inside [0, 1] for Parseval frames
  LemmaL0,           // pi_V T* = pi_V T* pi_{TV}
  LemmaL2,           // u + v = id  =>  u - v = u^2 - v^2
  ThmFinalMi,        // M_I identity through the dual energies
};

std::span<const CheckId> all_checks();
std::string_view to_string(CheckId id);
std::optional<CheckId> check_from_string(std::string_view name);

enum class FrameKind { GFrame, GFusion };

FrameKind frame_kind(CheckId id);
bool requires_parseval(CheckId id);
bool is_probe(CheckId id);

struct Witness {
  std::string field;
  std::int64_t dim = 0;
  std::uint64_t seed = 0;
  std::string frame;  // which instance of the bundle, e.g. "gfusion"
  IndexSubset subset;
  std::optional<std::size_t> sample;  // index into the sample vectors
  double value = 0.0;  // the offending scaled residual or margin

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Residuals are stored already scaled (by max(1, |f|^2) for scalar
/// identities, relative errors for reconstructions, by max(1, |S|) for
/// operator residuals); margins are scaled by max(1, |S|), and pointwise
/// margins additionally by max(1, |f|^2).
struct CheckResult {
  CheckId id{};
  std::vector<double> residuals;
  std::vector<double> margins;
  bool pass = true;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;  // instance fields left blank; filled in by the suite
  std::map<std::string, double> stats;
};

template <FieldScalar S>
CheckResult run_check(CheckId id, const GFrame<S>& frame, std::span<const IndexSubset> subsets,
                      std::span<const Vector<S>> samples, const CheckTolerances& tol);

template <FieldScalar S>
CheckResult run_check(CheckId id, const GFusionFrame<S>& frame, std::span<const IndexSubset> subsets,
                      std::span<const Vector<S>> samples, const CheckTolerances& tol);

struct SuitePlan {
  std::vector<std::int64_t> dims{2, 3, 5, 8};
  std::vector<Field> fields{Field::Real, Field::Complex};
  std::uint64_t seeds = 10;
  std::uint64_t base_seed = 1;
  std::size_t components = 4;
  std::size_t samples = 8;
  std::vector<CheckId> checks{all_checks().begin(), all_checks().end()};
  ToleranceConfig tolerances{};
  std::size_t max_witnesses = 8;

  /// Throws InvalidConfig.
  void validate() const;

  friend bool operator==(const SuitePlan&, const SuitePlan&) = default;
};

/// Component layout used by the suite for a frame on C^dim with n components:
/// subspace dim clamp(ceil(2 dim / n), 1, dim), codomain dim that plus (j mod 2),
/// weights uniform in [0.5, 2].
std::vector<ComponentSpec> suite_components(std::int64_t dim, std::size_t n);

struct CheckSummary {
  CheckId id{};
  bool probe = false;
  std::size_t instances = 0;
  std::size_t evaluations = 0;
  std::optional<double> max_residual;
  std::optional<double> min_margin;
  bool pass = true;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;
  std::map<std::string, double> stats;

  friend bool operator==(const CheckSummary&, const CheckSummary&) = default;
};

struct RunReport {
  SuitePlan plan;
  std::string source = "generated";  // or the frame file path
  std::vector<CheckSummary> checks;   // in catalog order
  bool pass = true;                   // conjunction over non-probe checks
  double wall_seconds = 0.0;

  const CheckSummary* find(CheckId id) const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Generates every (field, dim, seed) instance bundle of the plan and runs the
/// selected checks on it. Each bundle holds a g-frame, a Parseval g-frame, a
/// g-fusion frame and its parsevalization; every check runs once per bundle.
RunReport run_suite(const SuitePlan& plan);

/// Runs the selected checks against one loaded frame. G-frame checks use the
/// frame itself or its induced g-frame {v_j Lambda_j pi_j}; g-fusion checks
/// use the frame or the full-space g-fusion view of a g-frame. Checks that
/// need a Parseval frame are skipped when `skip_inapplicable`, otherwise they
/// raise WrongFrameKind.
template <FieldScalar S>
RunReport run_on_frame(const GFusionFrame<S>& frame, const SuitePlan& plan, bool skip_inapplicable);
template <FieldScalar S>
RunReport run_on_frame(const GFrame<S>& frame, const SuitePlan& plan, bool skip_inapplicable);

}  // namespace framekit
