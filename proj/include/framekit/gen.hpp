#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "framekit/gfusion.hpp"

namespace framekit {

/// xoshiro256** seeded through SplitMix64. Stream k of seed s starts from the
/// SplitMix64 sequence at mix(s) ^ mix(k ^ 0xD1B54A32D192ED03), so streams are
/// independent of each other and of neighbouring seeds.
///
/// Gaussians use the Box-Muller transform on two uniforms (53-bit, in (0, 1]),
/// consuming both outputs in order. Complex Gaussians draw the real part, then
/// the imaginary part, each N(0, 1/2). Matrices are filled column by column.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  double gaussian();

  template <FieldScalar S>
  S scalar();

  template <FieldScalar S>
  Operator<S> matrix(Eigen::Index rows, Eigen::Index cols);

  template <FieldScalar S>
  Vector<S> vector(Eigen::Index n);

 private:
  std::array<std::uint64_t, 4> state_{};
  std::optional<double> spare_;
};

template <>
Real Rng::scalar<Real>();
template <>
Complex Rng::scalar<Complex>();

struct ComponentSpec {
  Eigen::Index subspace_dim = 1;
  Eigen::Index codomain_dim = 1;
  double weight_lo = 1.0;
  double weight_hi = 1.0;
};

struct GenSpec {
  Eigen::Index dim = 2;
  std::vector<ComponentSpec> components;
  Field field = Field::Complex;
  std::uint64_t seed = 0;

  /// Throws InvalidConfig on non-positive dims, subspace dims above dim, or a
  /// weight range that is not 0 < lo <= hi.
  void validate() const;
};

inline constexpr int kMaxGenerationAttempts = 16;

/// Gaussian operators, subspaces spanned by orthonormalized Gaussian vectors,
/// uniform weights. Attempt k draws from stream k; the first attempt whose
/// lower frame bound exceeds pdtol wins. GenerationFailed after 16 attempts.
template <FieldScalar S>
GFusionFrame<S> random_gfusion(const GenSpec& spec, const Tolerances& tol = {});

/// random_gfusion followed by parsevalize; the result is within
/// kParsevalThreshold of the identity or GenerationFailed is raised.
template <FieldScalar S>
GFusionFrame<S> random_parseval_gfusion(const GenSpec& spec, const Tolerances& tol = {});

/// Classical fusion frame: random subspaces W_j of the given dimensions with
/// Lambda_j = id_H, so S = sum v_j^2 pi_j. No frame check is made.
template <FieldScalar S>
GFusionFrame<S> fusion_special_case(Eigen::Index dim, const std::vector<Eigen::Index>& subspace_dims,
                                    const std::vector<double>& weights, std::uint64_t seed,
                                    const Tolerances& tol = {});

/// Classical fusion frame over explicitly given spanning sets.
template <FieldScalar S>
GFusionFrame<S> fusion_frame(Eigen::Index dim, const std::vector<Operator<S>>& spanning_sets,
                             const std::vector<double>& weights, const Tolerances& tol = {});

/// W_j = span e_j, Lambda_j = id, v_j = 1 for j < n: Parseval, S_I = diag(1_I).
template <FieldScalar S>
GFusionFrame<S> coordinate_gfusion(Eigen::Index n);

/// Lambda_j = e_j*: the coordinate functionals, a Parseval g-frame.
template <FieldScalar S>
GFrame<S> coordinate_gframe(Eigen::Index n);

/// Gaussian blocks Lambda_j : C^dim -> C^{codims[j]}, retried like random_gfusion.
template <FieldScalar S>
GFrame<S> random_gframe(Eigen::Index dim, const std::vector<Eigen::Index>& codims, std::uint64_t seed,
                        const Tolerances& tol = {});

/// random_gframe with every block replaced by Lambda_j S^{-1/2}.
template <FieldScalar S>
GFrame<S> random_parseval_gframe(Eigen::Index dim, const std::vector<Eigen::Index>& codims, std::uint64_t seed,
                                 const Tolerances& tol = {});

/// Every subset of {0..n-1} when n <= 12 (in mask order), otherwise the empty
/// set, the full set and 254 seeded random masks.
std::vector<IndexSubset> enumerate_subsets(std::size_t n, std::uint64_t seed);

}  // namespace framekit
