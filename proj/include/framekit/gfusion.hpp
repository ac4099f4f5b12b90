#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "framekit/gframe.hpp"

namespace framekit {

/// One triple (W_j, Lambda_j, v_j). `basis` holds orthonormal columns spanning W_j.
template <FieldScalar S>
struct GFusionComponent {
  Operator<S> basis;
  Operator<S> lambda;
  double weight = 1.0;
};

/// Builds a component from an arbitrary spanning set of W_j.
template <FieldScalar S>
GFusionComponent<S> make_component(const Operator<S>& spanning, Operator<S> lambda, double weight,
                                   const Tolerances& tol = {});

/// A g-fusion frame (W_j, Lambda_j, v_j). Construction validates every
/// component and caches the projections pi_{W_j}, the frame operator
/// S = sum v_j^2 pi_j Lambda_j* Lambda_j pi_j, its bounds, and (for a frame)
/// S^{-1} and S^{-1/2}.
template <FieldScalar S>
class GFusionFrame {
 public:
  GFusionFrame(Eigen::Index dim, std::vector<GFusionComponent<S>> components, const Tolerances& tol = {});

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return components_.size(); }
  const GFusionComponent<S>& component(std::size_t j) const { return components_.at(j); }
  const std::vector<GFusionComponent<S>>& components() const { return components_; }
  const Operator<S>& projection(std::size_t j) const { return projections_.at(j); }
  /// Lambda_j pi_{W_j}
  const Operator<S>& restricted(std::size_t j) const { return restricted_.at(j); }
  const Tolerances& tolerances() const { return tol_; }

  const Operator<S>& frame_operator() const { return frame_operator_; }
  double lower_bound() const { return lower_; }
  double upper_bound() const { return upper_; }
  bool is_frame() const { return inverse_.has_value(); }
  bool is_parseval(double threshold = kParsevalThreshold) const;

  const Operator<S>& inverse_frame_operator() const;
  const Operator<S>& inverse_sqrt_frame_operator() const;

  /// Rows v_j Lambda_j pi_j stacked: the matrix of the analysis operator.
  Operator<S> stacked_analysis() const;

 private:
  const Operator<S>& require_frame(const std::optional<Operator<S>>& cached) const;

  Eigen::Index dim_ = 0;
  std::vector<GFusionComponent<S>> components_;
  Tolerances tol_;
  std::vector<Operator<S>> projections_;
  std::vector<Operator<S>> restricted_;
  Operator<S> frame_operator_;
  double lower_ = 0.0;
  double upper_ = 0.0;
  std::optional<Operator<S>> inverse_;
  std::optional<Operator<S>> inverse_sqrt_;
};

/// The canonical dual (S^{-1} W_j, Lambda_j pi_{W_j} S^{-1}, v_j), together
/// with the primal S^{-1} it was built from. The dual triple is itself a
/// g-fusion frame with frame operator S^{-1}.
template <FieldScalar S>
class DualGFusionFrame {
 public:
  DualGFusionFrame(GFusionFrame<S> dual, Operator<S> primal_inverse)
      : dual_(std::move(dual)), primal_inverse_(std::move(primal_inverse)) {}

  const GFusionFrame<S>& frame() const { return dual_; }
  std::size_t size() const { return dual_.size(); }
  /// pi_{W~_j}
  const Operator<S>& projection(std::size_t j) const { return dual_.projection(j); }
  /// Lambda~_j
  const Operator<S>& lambda(std::size_t j) const { return dual_.component(j).lambda; }
  double weight(std::size_t j) const { return dual_.component(j).weight; }
  const Operator<S>& primal_inverse() const { return primal_inverse_; }

 private:
  GFusionFrame<S> dual_;
  Operator<S> primal_inverse_;
};

/// {v_j Lambda_j pi_j f}
template <FieldScalar S>
BlockVector<S> gf_analysis(const GFusionFrame<S>& frame, const Vector<S>& f);

/// sum v_j pi_j Lambda_j* g_j
template <FieldScalar S>
Vector<S> gf_synthesis(const GFusionFrame<S>& frame, const BlockVector<S>& g);

template <FieldScalar S>
const Operator<S>& gf_frame_operator(const GFusionFrame<S>& frame) {
  return frame.frame_operator();
}

template <FieldScalar S>
DualGFusionFrame<S> gf_canonical_dual(const GFusionFrame<S>& frame);

/// sum v_j^2 pi_j Lambda_j* Lambda_j pi_j S^{-1} f  and  sum v_j^2 S^{-1} pi_j Lambda_j* Lambda_j pi_j f.
template <FieldScalar S>
ReconstructionErrors frame_operator_reconstruction_errors(const GFusionFrame<S>& frame, const Vector<S>& f);

/// sum v_j^2 pi_j Lambda_j* Lambda~_j pi_{W~_j} f  and  sum v_j^2 pi_{W~_j} Lambda~_j* Lambda_j pi_j f.
template <FieldScalar S>
ReconstructionErrors dual_reconstruction_errors(const GFusionFrame<S>& frame, const DualGFusionFrame<S>& dual,
                                                const Vector<S>& f);

/// | <S^{-1} f, f> - sum v_j^2 |Lambda~_j pi_{W~_j} f|^2 |
template <FieldScalar S>
double inverse_quadratic_residual(const GFusionFrame<S>& frame, const DualGFusionFrame<S>& dual,
                                  const Vector<S>& f);
template <FieldScalar S>
double inverse_quadratic_residual(const GFusionFrame<S>& frame, const Vector<S>& f);

/// S_I = sum_{j in I} v_j^2 pi_j Lambda_j* Lambda~_j pi_{W~_j}.
template <FieldScalar S>
Operator<S> s_partial(const GFusionFrame<S>& frame, const DualGFusionFrame<S>& dual, const IndexSubset& subset);
template <FieldScalar S>
Operator<S> s_partial(const GFusionFrame<S>& frame, const IndexSubset& subset);

/// M_I = sum_{j in I} v_j^2 pi_j Lambda_j* Lambda_j pi_j.
template <FieldScalar S>
Operator<S> m_partial(const GFusionFrame<S>& frame, const IndexSubset& subset);

/// sum_{j in I} v_j^2 |Lambda_j pi_j f|^2
template <FieldScalar S>
double partial_energy(const GFusionFrame<S>& frame, const IndexSubset& subset, const Vector<S>& f);

/// (S^{-1/2} W_j, Lambda_j pi_j S^{-1/2}, v_j), a Parseval g-fusion frame.
template <FieldScalar S>
GFusionFrame<S> parsevalize(const GFusionFrame<S>& frame);

/// | m_partial(parsevalize(F), I) - S^{-1/2} M_I S^{-1/2} |
template <FieldScalar S>
double parsevalize_partial_residual(const GFusionFrame<S>& frame, const GFusionFrame<S>& parsevalized,
                                    const IndexSubset& subset);

/// max_j | pi_{W~_j} S^{-1} pi_j - S^{-1} pi_j |
template <FieldScalar S>
double dual_subspace_residual(const GFusionFrame<S>& frame, const DualGFusionFrame<S>& dual);

/// The g-frame {v_j Lambda_j pi_j}; it has the same frame operator.
template <FieldScalar S>
GFrame<S> as_gframe(const GFusionFrame<S>& frame);

/// Each Lambda_j as a full-space component with unit weight.
template <FieldScalar S>
GFusionFrame<S> as_gfusion(const GFrame<S>& frame);

}  // namespace framekit
