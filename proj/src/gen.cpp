#include "framekit/gen.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "framekit/errors.hpp"

namespace framekit {
namespace {

std::uint64_t splitmix_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t splitmix_next(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  return splitmix_mix(x);
}

template <FieldScalar S>
void require_field(Field field) {
  if (field != field_of<S>) {
    throw FrameError(ErrorCode::InvalidConfig, "spec asks for a " + std::string(to_string(field)) +
                                                   " frame but a " + std::string(to_string(field_of<S>)) +
                                                   " one was requested");
  }
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = splitmix_mix(seed) ^ splitmix_mix(stream ^ 0xD1B54A32D192ED03ULL);
  for (auto& word : state_) word = splitmix_next(x);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::gaussian() {
  if (spare_) {
    double out = *spare_;
    spare_.reset();
    return out;
  }
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

template <>
Real Rng::scalar<Real>() {
  return gaussian();
}

template <>
Complex Rng::scalar<Complex>() {
  double re = gaussian() * std::numbers::sqrt2 / 2.0;
  double im = gaussian() * std::numbers::sqrt2 / 2.0;
  return {re, im};
}

template <FieldScalar S>
Operator<S> Rng::matrix(Eigen::Index rows, Eigen::Index cols) {
  Operator<S> out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) out(r, c) = scalar<S>();
  }
  return out;
}

template <FieldScalar S>
Vector<S> Rng::vector(Eigen::Index n) {
  Vector<S> out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = scalar<S>();
  return out;
}

void GenSpec::validate() const {
  if (dim < 1) throw FrameError(ErrorCode::InvalidConfig, "dim must be >= 1");
  if (components.empty()) throw FrameError(ErrorCode::InvalidConfig, "at least one component is required");
  for (std::size_t j = 0; j < components.size(); ++j) {
    const auto& c = components[j];
    std::string label = "component " + std::to_string(j);
    if (c.subspace_dim < 1 || c.subspace_dim > dim) {
      throw FrameError(ErrorCode::InvalidConfig, label + ": subspace dim must lie in [1, dim]");
    }
    if (c.codomain_dim < 1) throw FrameError(ErrorCode::InvalidConfig, label + ": codomain dim must be >= 1");
    if (!(c.weight_lo > 0.0) || !(c.weight_lo <= c.weight_hi) || !std::isfinite(c.weight_hi)) {
      throw FrameError(ErrorCode::InvalidConfig, label + ": weight range must satisfy 0 < lo <= hi");
    }
  }
}

template <FieldScalar S>
GFusionFrame<S> random_gfusion(const GenSpec& spec, const Tolerances& tol) {
  spec.validate();
  require_field<S>(spec.field);
  double best_lower = 0.0;
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    Rng rng(spec.seed, static_cast<std::uint64_t>(attempt));
    std::vector<GFusionComponent<S>> components;
    components.reserve(spec.components.size());
    for (const auto& c : spec.components) {
      Operator<S> spanning = rng.matrix<S>(spec.dim, c.subspace_dim);
      Operator<S> lambda = rng.matrix<S>(c.codomain_dim, spec.dim);
      double weight = c.weight_lo == c.weight_hi ? c.weight_lo : rng.uniform(c.weight_lo, c.weight_hi);
      components.push_back(make_component<S>(spanning, std::move(lambda), weight, tol));
    }
    GFusionFrame<S> frame(spec.dim, std::move(components), tol);
    if (frame.is_frame()) return frame;
    best_lower = std::max(best_lower, frame.lower_bound());
  }
  throw FrameError(ErrorCode::GenerationFailed,
                   "no g-fusion frame after " + std::to_string(kMaxGenerationAttempts) +
                       " attempts (largest lower bound " + std::to_string(best_lower) +
                       "); the components cannot cover H");
}

template <FieldScalar S>
GFusionFrame<S> random_parseval_gfusion(const GenSpec& spec, const Tolerances& tol) {
  GFusionFrame<S> out = parsevalize<S>(random_gfusion<S>(spec, tol));
  if (!out.is_parseval()) {
    throw FrameError(ErrorCode::GenerationFailed, "parsevalized frame misses the Parseval threshold");
  }
  return out;
}

template <FieldScalar S>
GFusionFrame<S> fusion_frame(Eigen::Index dim, const std::vector<Operator<S>>& spanning_sets,
                             const std::vector<double>& weights, const Tolerances& tol) {
  if (spanning_sets.size() != weights.size()) {
    throw FrameError(ErrorCode::ShapeMismatch, "one weight per subspace is required");
  }
  std::vector<GFusionComponent<S>> components;
  components.reserve(spanning_sets.size());
  for (std::size_t j = 0; j < spanning_sets.size(); ++j) {
    components.push_back(make_component<S>(spanning_sets[j], linops::identity<S>(dim), weights[j], tol));
  }
  return GFusionFrame<S>(dim, std::move(components), tol);
}

template <FieldScalar S>
GFusionFrame<S> fusion_special_case(Eigen::Index dim, const std::vector<Eigen::Index>& subspace_dims,
                                    const std::vector<double>& weights, std::uint64_t seed, const Tolerances& tol) {
  Rng rng(seed);
  std::vector<Operator<S>> spanning;
  spanning.reserve(subspace_dims.size());
  for (auto k : subspace_dims) {
    if (k < 1 || k > dim) throw FrameError(ErrorCode::InvalidConfig, "subspace dim must lie in [1, dim]");
    spanning.push_back(rng.matrix<S>(dim, k));
  }
  return fusion_frame<S>(dim, spanning, weights, tol);
}

template <FieldScalar S>
GFusionFrame<S> coordinate_gfusion(Eigen::Index n) {
  std::vector<GFusionComponent<S>> components;
  for (Eigen::Index j = 0; j < n; ++j) {
    Operator<S> basis = Operator<S>::Zero(n, 1);
    basis(j, 0) = S(1);
    components.push_back({basis, linops::identity<S>(n), 1.0});
  }
  return GFusionFrame<S>(n, std::move(components));
}

template <FieldScalar S>
GFrame<S> coordinate_gframe(Eigen::Index n) {
  std::vector<Operator<S>> blocks;
  for (Eigen::Index j = 0; j < n; ++j) {
    Operator<S> row = Operator<S>::Zero(1, n);
    row(0, j) = S(1);
    blocks.push_back(row);
  }
  return GFrame<S>(std::move(blocks));
}

template <FieldScalar S>
GFrame<S> random_gframe(Eigen::Index dim, const std::vector<Eigen::Index>& codims, std::uint64_t seed,
                        const Tolerances& tol) {
  if (dim < 1 || codims.empty()) throw FrameError(ErrorCode::InvalidConfig, "empty g-frame spec");
  for (auto m : codims) {
    if (m < 1) throw FrameError(ErrorCode::InvalidConfig, "codomain dims must be >= 1");
  }
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    Rng rng(seed, static_cast<std::uint64_t>(attempt));
    std::vector<Operator<S>> blocks;
    blocks.reserve(codims.size());
    for (auto m : codims) blocks.push_back(rng.matrix<S>(m, dim));
    GFrame<S> frame(std::move(blocks), tol);
    if (frame.is_frame()) return frame;
  }
  throw FrameError(ErrorCode::GenerationFailed, "no g-frame after " + std::to_string(kMaxGenerationAttempts) +
                                                    " attempts; total codomain dimension too small?");
}

template <FieldScalar S>
GFrame<S> random_parseval_gframe(Eigen::Index dim, const std::vector<Eigen::Index>& codims, std::uint64_t seed,
                                 const Tolerances& tol) {
  GFrame<S> frame = random_gframe<S>(dim, codims, seed, tol);
  Operator<S> root = linops::psd_power<S>(frame.frame_operator(), -0.5, tol);
  std::vector<Operator<S>> blocks;
  blocks.reserve(frame.size());
  for (const auto& b : frame.blocks()) blocks.push_back(b * root);
  GFrame<S> out(std::move(blocks), tol);
  if (!out.is_parseval()) {
    throw FrameError(ErrorCode::GenerationFailed, "normalized g-frame misses the Parseval threshold");
  }
  return out;
}

std::vector<IndexSubset> enumerate_subsets(std::size_t n, std::uint64_t seed) {
  std::vector<IndexSubset> out;
  if (n <= 12) {
    std::uint64_t count = std::uint64_t{1} << n;
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(IndexSubset::from_mask(mask, n));
    return out;
  }
  out.reserve(256);
  out.push_back(IndexSubset{});
  out.push_back(IndexSubset::all(n));
  Rng rng(seed, 0x5B5E7ULL);
  while (out.size() < 256) {
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.next_u64() >> 63) members.push_back(j);
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

#define FRAMEKIT_INSTANTIATE_GEN(S)                                                                             \
  template Operator<S> Rng::matrix<S>(Eigen::Index, Eigen::Index);                                              \
  template Vector<S> Rng::vector<S>(Eigen::Index);                                                              \
  template GFusionFrame<S> random_gfusion<S>(const GenSpec&, const Tolerances&);                                \
  template GFusionFrame<S> random_parseval_gfusion<S>(const GenSpec&, const Tolerances&);                       \
  template GFusionFrame<S> fusion_special_case<S>(Eigen::Index, const std::vector<Eigen::Index>&,               \
                                                  const std::vector<double>&, std::uint64_t, const Tolerances&); \
  template GFusionFrame<S> fusion_frame<S>(Eigen::Index, const std::vector<Operator<S>>&,                       \
                                           const std::vector<double>&, const Tolerances&);                      \
  template GFusionFrame<S> coordinate_gfusion<S>(Eigen::Index);                                                 \
  template GFrame<S> coordinate_gframe<S>(Eigen::Index);                                                        \
  template GFrame<S> random_gframe<S>(Eigen::Index, const std::vector<Eigen::Index>&, std::uint64_t,            \
                                      const Tolerances&);                                                       \
  template GFrame<S> random_parseval_gframe<S>(Eigen::Index, const std::vector<Eigen::Index>&, std::uint64_t,   \
                                               const Tolerances&);

FRAMEKIT_INSTANTIATE_GEN(Real)
FRAMEKIT_INSTANTIATE_GEN(Complex)

#undef FRAMEKIT_INSTANTIATE_GEN

}  // namespace framekit
