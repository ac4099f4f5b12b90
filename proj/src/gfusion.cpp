#include "framekit/gfusion.hpp"

#include <cmath>
#include <string>

#include "framekit/errors.hpp"

namespace framekit {
namespace {

std::string component_label(std::size_t j) {
  return "component " + std::to_string(j);
}

template <FieldScalar S>
void require_length(const GFusionFrame<S>& frame, const Vector<S>& f) {
  if (f.size() != frame.dim()) throw FrameError(ErrorCode::ShapeMismatch, "vector length differs from dim H");
}

template <FieldScalar S>
ReconstructionErrors relative_errors(const Vector<S>& first, const Vector<S>& second, const Vector<S>& f) {
  double scale = f.norm();
  if (scale == 0.0) return {first.norm(), second.norm()};
  return {(first - f).norm() / scale, (second - f).norm() / scale};
}

}  // namespace

template <FieldScalar S>
GFusionComponent<S> make_component(const Operator<S>& spanning, Operator<S> lambda, double weight,
                                   const Tolerances& tol) {
  return {linops::orthonormal_basis<S>(spanning, tol), std::move(lambda), weight};
}

template <FieldScalar S>
GFusionFrame<S>::GFusionFrame(Eigen::Index dim, std::vector<GFusionComponent<S>> components, const Tolerances& tol)
    : dim_(dim), components_(std::move(components)), tol_(tol) {
  if (dim_ < 1) throw FrameError(ErrorCode::ShapeMismatch, "dim H must be >= 1");
  if (components_.empty()) throw FrameError(ErrorCode::ShapeMismatch, "a g-fusion frame needs a component");
  frame_operator_ = Operator<S>::Zero(dim_, dim_);
  projections_.reserve(components_.size());
  restricted_.reserve(components_.size());
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const auto& c = components_[j];
    if (!(c.weight > 0.0) || !std::isfinite(c.weight)) {
      throw FrameError(ErrorCode::InvalidWeight, component_label(j) + " has weight " + std::to_string(c.weight));
    }
    if (c.basis.rows() != dim_) throw FrameError(ErrorCode::ShapeMismatch, component_label(j) + " basis rows");
    if (c.basis.cols() < 1) throw FrameError(ErrorCode::ZeroSubspace, component_label(j));
    if (c.lambda.cols() != dim_ || c.lambda.rows() < 1) {
      throw FrameError(ErrorCode::ShapeMismatch, component_label(j) + " operator shape");
    }
    if (!c.basis.allFinite() || !c.lambda.allFinite()) {
      throw FrameError(ErrorCode::NonFiniteEntry, component_label(j));
    }
    projections_.push_back(linops::projection<S>(c.basis, tol_));
    restricted_.push_back(c.lambda * projections_.back());
    const auto& r = restricted_.back();
    frame_operator_ += (c.weight * c.weight) * (r.adjoint() * r);
  }
  frame_operator_ = linops::symmetrize<S>(frame_operator_);
  RealVector eig = linops::eigenvalues<S>(frame_operator_, tol_);
  lower_ = eig(0);
  upper_ = eig(eig.size() - 1);
  if (lower_ > tol_.pdtol) {
    inverse_ = linops::psd_power<S>(frame_operator_, -1.0, tol_);
    inverse_sqrt_ = linops::psd_power<S>(frame_operator_, -0.5, tol_);
  }
}

template <FieldScalar S>
bool GFusionFrame<S>::is_parseval(double threshold) const {
  return linops::norm<S>(frame_operator_ - linops::identity<S>(dim_)) <= threshold;
}

template <FieldScalar S>
const Operator<S>& GFusionFrame<S>::require_frame(const std::optional<Operator<S>>& cached) const {
  if (!cached) {
    throw FrameError(ErrorCode::NotAFrame, "lower frame bound " + std::to_string(lower_) + " is not positive");
  }
  return *cached;
}

template <FieldScalar S>
const Operator<S>& GFusionFrame<S>::inverse_frame_operator() const {
  return require_frame(inverse_);
}

template <FieldScalar S>
const Operator<S>& GFusionFrame<S>::inverse_sqrt_frame_operator() const {
  return require_frame(inverse_sqrt_);
}

template <FieldScalar S>
Operator<S> GFusionFrame<S>::stacked_analysis() const {
  Eigen::Index rows = 0;
  for (const auto& c : components_) rows += c.lambda.rows();
  Operator<S> out(rows, dim_);
  Eigen::Index at = 0;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const auto& c = components_[j];
    out.middleRows(at, c.lambda.rows()) = c.weight * (c.lambda * c.basis) * c.basis.adjoint();
    at += c.lambda.rows();
  }
  return out;
}

template <FieldScalar S>
BlockVector<S> gf_analysis(const GFusionFrame<S>& frame, const Vector<S>& f) {
  require_length(frame, f);
  BlockVector<S> out;
  out.blocks.reserve(frame.size());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    out.blocks.push_back(frame.component(j).weight * (frame.restricted(j) * f));
  }
  return out;
}

template <FieldScalar S>
Vector<S> gf_synthesis(const GFusionFrame<S>& frame, const BlockVector<S>& g) {
  if (g.blocks.size() != frame.size()) throw FrameError(ErrorCode::ShapeMismatch, "block count differs");
  Vector<S> out = Vector<S>::Zero(frame.dim());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const auto& c = frame.component(j);
    if (g.blocks[j].size() != c.lambda.rows()) {
      throw FrameError(ErrorCode::ShapeMismatch, component_label(j) + " block has the wrong length");
    }
    out += c.weight * (frame.projection(j) * (c.lambda.adjoint() * g.blocks[j]));
  }
  return out;
}

template <FieldScalar S>
DualGFusionFrame<S> gf_canonical_dual(const GFusionFrame<S>& frame) {
  const auto& inv = frame.inverse_frame_operator();
  std::vector<GFusionComponent<S>> dual;
  dual.reserve(frame.size());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const auto& c = frame.component(j);
    Operator<S> moved = inv * c.basis;
    dual.push_back({linops::orthonormal_basis<S>(moved, frame.tolerances()), frame.restricted(j) * inv, c.weight});
  }
  return DualGFusionFrame<S>(GFusionFrame<S>(frame.dim(), std::move(dual), frame.tolerances()), inv);
}

template <FieldScalar S>
ReconstructionErrors frame_operator_reconstruction_errors(const GFusionFrame<S>& frame, const Vector<S>& f) {
  require_length(frame, f);
  const auto& inv = frame.inverse_frame_operator();
  Vector<S> first = Vector<S>::Zero(frame.dim());
  Vector<S> second = Vector<S>::Zero(frame.dim());
  Vector<S> inv_f = inv * f;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    double w2 = frame.component(j).weight * frame.component(j).weight;
    const auto& r = frame.restricted(j);
    first += w2 * (r.adjoint() * (r * inv_f));
    second += w2 * (inv * (r.adjoint() * (r * f)));
  }
  return relative_errors<S>(first, second, f);
}

template <FieldScalar S>
ReconstructionErrors dual_reconstruction_errors(const GFusionFrame<S>& frame, const DualGFusionFrame<S>& dual,
                                                const Vector<S>& f) {
  require_length(frame, f);
  Vector<S> first = Vector<S>::Zero(frame.dim());
  Vector<S> second = Vector<S>::Zero(frame.dim());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const auto& c = frame.component(j);
    double w2 = c.weight * c.weight;
    const auto& pi = frame.projection(j);
    const auto& pi_dual = dual.projection(j);
    const auto& lambda_dual = dual.lambda(j);
    first += w2 * (pi * (c.lambda.adjoint() * (lambda_dual * (pi_dual * f))));
    second += w2 * (pi_dual * (lambda_dual.adjoint() * (c.lambda * (pi * f))));
  }
  return relative_errors<S>(first, second, f);
}

template <FieldScalar S>
double inverse_quadratic_residual(const GFusionFrame<S>& frame, const DualGFusionFrame<S>& dual,
                                  const Vector<S>& f) {
  require_length(frame, f);
  S quadratic = linops::inner<S>(Vector<S>(frame.inverse_frame_operator() * f), f);
  double energy = 0.0;
  for (std::size_t j = 0; j < dual.size(); ++j) {
    double w = dual.weight(j);
    energy += w * w * (dual.lambda(j) * (dual.projection(j) * f)).squaredNorm();
  }
  return std::abs(quadratic - S(energy));
}

template <FieldScalar S>
double inverse_quadratic_residual(const GFusionFrame<S>& frame, const Vector<S>& f) {
  return inverse_quadratic_residual<S>(frame, gf_canonical_dual<S>(frame), f);
}

template <FieldScalar S>
Operator<S> s_partial(const GFusionFrame<S>& frame, const DualGFusionFrame<S>& dual, const IndexSubset& subset) {
  subset.validate(frame.size());
  Operator<S> out = Operator<S>::Zero(frame.dim(), frame.dim());
  for (std::size_t j : subset) {
    const auto& c = frame.component(j);
    out += (c.weight * c.weight) *
           (frame.projection(j) * c.lambda.adjoint() * dual.lambda(j) * dual.projection(j));
  }
  return out;
}

template <FieldScalar S>
Operator<S> s_partial(const GFusionFrame<S>& frame, const IndexSubset& subset) {
  subset.validate(frame.size());
  return s_partial<S>(frame, gf_canonical_dual<S>(frame), subset);
}

template <FieldScalar S>
Operator<S> m_partial(const GFusionFrame<S>& frame, const IndexSubset& subset) {
  subset.validate(frame.size());
  Operator<S> out = Operator<S>::Zero(frame.dim(), frame.dim());
  for (std::size_t j : subset) {
    const auto& r = frame.restricted(j);
    double w = frame.component(j).weight;
    out += (w * w) * (r.adjoint() * r);
  }
  return out;
}

template <FieldScalar S>
double partial_energy(const GFusionFrame<S>& frame, const IndexSubset& subset, const Vector<S>& f) {
  require_length(frame, f);
  subset.validate(frame.size());
  double total = 0.0;
  for (std::size_t j : subset) {
    double w = frame.component(j).weight;
    total += w * w * (frame.restricted(j) * f).squaredNorm();
  }
  return total;
}

template <FieldScalar S>
GFusionFrame<S> parsevalize(const GFusionFrame<S>& frame) {
  const auto& root = frame.inverse_sqrt_frame_operator();
  std::vector<GFusionComponent<S>> out;
  out.reserve(frame.size());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const auto& c = frame.component(j);
    Operator<S> moved = root * c.basis;
    out.push_back({linops::orthonormal_basis<S>(moved, frame.tolerances()), frame.restricted(j) * root, c.weight});
  }
  return GFusionFrame<S>(frame.dim(), std::move(out), frame.tolerances());
}

template <FieldScalar S>
double parsevalize_partial_residual(const GFusionFrame<S>& frame, const GFusionFrame<S>& parsevalized,
                                    const IndexSubset& subset) {
  const auto& root = frame.inverse_sqrt_frame_operator();
  Operator<S> conjugated = root * m_partial<S>(frame, subset) * root;
  return linops::norm<S>(m_partial<S>(parsevalized, subset) - conjugated);
}

template <FieldScalar S>
double dual_subspace_residual(const GFusionFrame<S>& frame, const DualGFusionFrame<S>& dual) {
  const auto& inv = frame.inverse_frame_operator();
  double worst = 0.0;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    Operator<S> right = inv * frame.projection(j);
    worst = std::max(worst, linops::norm<S>(dual.projection(j) * right - right));
  }
  return worst;
}

template <FieldScalar S>
GFrame<S> as_gframe(const GFusionFrame<S>& frame) {
  std::vector<Operator<S>> blocks;
  blocks.reserve(frame.size());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    blocks.push_back(frame.component(j).weight * frame.restricted(j));
  }
  return GFrame<S>(std::move(blocks), frame.tolerances());
}

template <FieldScalar S>
GFusionFrame<S> as_gfusion(const GFrame<S>& frame) {
  std::vector<GFusionComponent<S>> out;
  out.reserve(frame.size());
  for (const auto& b : frame.blocks()) out.push_back({linops::identity<S>(frame.dim()), b, 1.0});
  return GFusionFrame<S>(frame.dim(), std::move(out), frame.tolerances());
}

#define FRAMEKIT_INSTANTIATE_GFUSION(S)                                                                        \
  template GFusionComponent<S> make_component<S>(const Operator<S>&, Operator<S>, double, const Tolerances&); \
  template class GFusionFrame<S>;                                                                              \
  template BlockVector<S> gf_analysis<S>(const GFusionFrame<S>&, const Vector<S>&);                            \
  template Vector<S> gf_synthesis<S>(const GFusionFrame<S>&, const BlockVector<S>&);                           \
  template DualGFusionFrame<S> gf_canonical_dual<S>(const GFusionFrame<S>&);                                   \
  template ReconstructionErrors frame_operator_reconstruction_errors<S>(const GFusionFrame<S>&,                 \
                                                                        const Vector<S>&);                     \
  template ReconstructionErrors dual_reconstruction_errors<S>(const GFusionFrame<S>&,                          \
                                                              const DualGFusionFrame<S>&, const Vector<S>&);   \
  template double inverse_quadratic_residual<S>(const GFusionFrame<S>&, const DualGFusionFrame<S>&,            \
                                                const Vector<S>&);                                             \
  template double inverse_quadratic_residual<S>(const GFusionFrame<S>&, const Vector<S>&);                     \
  template Operator<S> s_partial<S>(const GFusionFrame<S>&, const DualGFusionFrame<S>&, const IndexSubset&);   \
  template Operator<S> s_partial<S>(const GFusionFrame<S>&, const IndexSubset&);                               \
  template Operator<S> m_partial<S>(const GFusionFrame<S>&, const IndexSubset&);                               \
  template double partial_energy<S>(const GFusionFrame<S>&, const IndexSubset&, const Vector<S>&);             \
  template GFusionFrame<S> parsevalize<S>(const GFusionFrame<S>&);                                             \
  template double parsevalize_partial_residual<S>(const GFusionFrame<S>&, const GFusionFrame<S>&,              \
                                                  const IndexSubset&);                                         \
  template double dual_subspace_residual<S>(const GFusionFrame<S>&, const DualGFusionFrame<S>&);               \
  template GFrame<S> as_gframe<S>(const GFusionFrame<S>&);                                                     \
  template GFusionFrame<S> as_gfusion<S>(const GFrame<S>&);

FRAMEKIT_INSTANTIATE_GFUSION(Real)
FRAMEKIT_INSTANTIATE_GFUSION(Complex)

#undef FRAMEKIT_INSTANTIATE_GFUSION

}  // namespace framekit
