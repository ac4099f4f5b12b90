#include "framekit/gframe.hpp"

#include <cmath>
#include <string>

#include "framekit/errors.hpp"

namespace framekit {

template <FieldScalar S>
S BlockVector<S>::inner(const BlockVector& other) const {
  if (other.blocks.size() != blocks.size()) {
    throw FrameError(ErrorCode::ShapeMismatch, "block vectors have different block counts");
  }
  S total{};
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].size() != other.blocks[j].size()) {
      throw FrameError(ErrorCode::ShapeMismatch, "block " + std::to_string(j) + " sizes differ");
    }
    total += linops::inner<S>(blocks[j], other.blocks[j]);
  }
  return total;
}

template <FieldScalar S>
GFrame<S>::GFrame(std::vector<Operator<S>> blocks, const Tolerances& tol) : blocks_(std::move(blocks)), tol_(tol) {
  if (blocks_.empty()) throw FrameError(ErrorCode::ShapeMismatch, "a g-frame needs at least one block");
  dim_ = blocks_.front().cols();
  if (dim_ < 1) throw FrameError(ErrorCode::ShapeMismatch, "blocks must act on a space of dimension >= 1");
  frame_operator_ = Operator<S>::Zero(dim_, dim_);
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const auto& b = blocks_[j];
    if (b.cols() != dim_ || b.rows() < 1) {
      throw FrameError(ErrorCode::ShapeMismatch, "block " + std::to_string(j) + " has shape " +
                                                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    if (!b.allFinite()) throw FrameError(ErrorCode::NonFiniteEntry, "block " + std::to_string(j));
    frame_operator_ += b.adjoint() * b;
  }
  frame_operator_ = linops::symmetrize<S>(frame_operator_);
  RealVector eig = linops::eigenvalues<S>(frame_operator_, tol_);
  lower_ = eig(0);
  upper_ = eig(eig.size() - 1);
  if (lower_ > tol_.pdtol) inverse_ = linops::psd_power<S>(frame_operator_, -1.0, tol_);
}

template <FieldScalar S>
bool GFrame<S>::is_parseval(double threshold) const {
  return linops::norm<S>(frame_operator_ - linops::identity<S>(dim_)) <= threshold;
}

template <FieldScalar S>
const Operator<S>& GFrame<S>::inverse_frame_operator() const {
  if (!inverse_) {
    throw FrameError(ErrorCode::NotAFrame, "lower frame bound " + std::to_string(lower_) + " is not positive");
  }
  return *inverse_;
}

template <FieldScalar S>
Operator<S> GFrame<S>::stacked_analysis() const {
  Eigen::Index rows = 0;
  for (const auto& b : blocks_) rows += b.rows();
  Operator<S> out(rows, dim_);
  Eigen::Index at = 0;
  for (const auto& b : blocks_) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

template <FieldScalar S>
BlockVector<S> analysis(const GFrame<S>& frame, const Vector<S>& f) {
  if (f.size() != frame.dim()) throw FrameError(ErrorCode::ShapeMismatch, "vector length differs from dim H");
  BlockVector<S> out;
  out.blocks.reserve(frame.size());
  for (const auto& b : frame.blocks()) out.blocks.push_back(b * f);
  return out;
}

template <FieldScalar S>
Vector<S> synthesis(const GFrame<S>& frame, const BlockVector<S>& g) {
  if (g.blocks.size() != frame.size()) throw FrameError(ErrorCode::ShapeMismatch, "block count differs");
  Vector<S> out = Vector<S>::Zero(frame.dim());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    if (g.blocks[j].size() != frame.block(j).rows()) {
      throw FrameError(ErrorCode::ShapeMismatch, "block " + std::to_string(j) + " has the wrong length");
    }
    out += frame.block(j).adjoint() * g.blocks[j];
  }
  return out;
}

template <FieldScalar S>
GFrame<S> canonical_dual(const GFrame<S>& frame) {
  const auto& inv = frame.inverse_frame_operator();
  std::vector<Operator<S>> dual;
  dual.reserve(frame.size());
  for (const auto& b : frame.blocks()) dual.push_back(b * inv);
  return GFrame<S>(std::move(dual), frame.tolerances());
}

template <FieldScalar S>
ReconstructionErrors reconstruction_errors(const GFrame<S>& frame, const Vector<S>& f) {
  const auto& inv = frame.inverse_frame_operator();
  Vector<S> first = Vector<S>::Zero(frame.dim());
  Vector<S> second = Vector<S>::Zero(frame.dim());
  for (const auto& b : frame.blocks()) {
    Operator<S> dual = b * inv;
    first += dual.adjoint() * (b * f);
    second += b.adjoint() * (dual * f);
  }
  double scale = f.norm();
  if (scale == 0.0) return {first.norm(), second.norm()};
  return {(first - f).norm() / scale, (second - f).norm() / scale};
}

template <FieldScalar S>
Operator<S> partial_sum(const GFrame<S>& frame, const IndexSubset& subset) {
  subset.validate(frame.size());
  const auto& inv = frame.inverse_frame_operator();
  Operator<S> out = Operator<S>::Zero(frame.dim(), frame.dim());
  for (std::size_t j : subset) {
    const auto& b = frame.block(j);
    out += b.adjoint() * (b * inv);
  }
  return out;
}

template <FieldScalar S>
ScalarIdentity<S> make_identity(S lhs, S rhs) {
  S diff = lhs - rhs;
  return {lhs, rhs, std::abs(diff), std::abs(std::imag(diff))};
}

template <FieldScalar S>
ScalarIdentity<S> thm_t1_residual(const GFrame<S>& frame, const IndexSubset& subset, const Vector<S>& f) {
  if (f.size() != frame.dim()) throw FrameError(ErrorCode::ShapeMismatch, "vector length differs from dim H");
  const auto& inv = frame.inverse_frame_operator();
  subset.validate(frame.size());

  Vector<S> s_in = Vector<S>::Zero(frame.dim());
  Vector<S> s_out = Vector<S>::Zero(frame.dim());
  S lhs{};
  S rhs{};
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const auto& b = frame.block(j);
    Vector<S> dual_f = b * (inv * f);
    Vector<S> frame_f = b * f;
    S pairing = linops::inner<S>(dual_f, frame_f);
    if (subset.contains(j)) {
      lhs += pairing;
      s_in += b.adjoint() * dual_f;
    } else {
      rhs += Eigen::numext::conj(pairing);
      s_out += b.adjoint() * dual_f;
    }
  }
  lhs -= s_in.squaredNorm();
  rhs -= s_out.squaredNorm();
  return make_identity<S>(lhs, rhs);
}

template <FieldScalar S>
ScalarIdentity<S> famous_parseval_residual(const GFrame<S>& frame, const IndexSubset& subset,
                                           const Vector<S>& f) {
  if (!frame.is_parseval()) throw FrameError(ErrorCode::WrongFrameKind, "frame is not Parseval");
  if (f.size() != frame.dim()) throw FrameError(ErrorCode::ShapeMismatch, "vector length differs from dim H");
  subset.validate(frame.size());
  Vector<S> s_in = Vector<S>::Zero(frame.dim());
  Vector<S> s_out = Vector<S>::Zero(frame.dim());
  double energy_in = 0.0;
  double energy_out = 0.0;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const auto& b = frame.block(j);
    Vector<S> coeff = b * f;
    if (subset.contains(j)) {
      energy_in += coeff.squaredNorm();
      s_in += b.adjoint() * coeff;
    } else {
      energy_out += coeff.squaredNorm();
      s_out += b.adjoint() * coeff;
    }
  }
  return make_identity<S>(S(energy_in - s_in.squaredNorm()), S(energy_out - s_out.squaredNorm()));
}

#define FRAMEKIT_INSTANTIATE_GFRAME(S)                                                                 \
  template struct BlockVector<S>;                                                                      \
  template class GFrame<S>;                                                                            \
  template BlockVector<S> analysis<S>(const GFrame<S>&, const Vector<S>&);                             \
  template Vector<S> synthesis<S>(const GFrame<S>&, const BlockVector<S>&);                            \
  template GFrame<S> canonical_dual<S>(const GFrame<S>&);                                              \
  template ReconstructionErrors reconstruction_errors<S>(const GFrame<S>&, const Vector<S>&);          \
  template Operator<S> partial_sum<S>(const GFrame<S>&, const IndexSubset&);                           \
  template ScalarIdentity<S> make_identity<S>(S, S);                                                   \
  template ScalarIdentity<S> thm_t1_residual<S>(const GFrame<S>&, const IndexSubset&, const Vector<S>&); \
  template ScalarIdentity<S> famous_parseval_residual<S>(const GFrame<S>&, const IndexSubset&,         \
                                                         const Vector<S>&);

FRAMEKIT_INSTANTIATE_GFRAME(Real)
FRAMEKIT_INSTANTIATE_GFRAME(Complex)

#undef FRAMEKIT_INSTANTIATE_GFRAME

}  // namespace framekit
