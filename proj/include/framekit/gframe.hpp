#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "framekit/index_subset.hpp"
#include "framekit/linops.hpp"

namespace framekit {

/// Frames whose frame operator is within this distance (spectral norm) of the
/// identity are treated as Parseval.
inline constexpr double kParsevalThreshold = 1e-8;

/// Element of the finite direct sum H_0 + H_1 + ... with the l2 inner product.
template <FieldScalar S>
struct BlockVector {
  std::vector<Vector<S>> blocks;

  double squared_norm() const {
    double total = 0.0;
    for (const auto& b : blocks) total += b.squaredNorm();
    return total;
  }

  S inner(const BlockVector& other) const;
};

/// A family {Lambda_j : H -> H_j}. The frame operator and its extreme
/// eigenvalues (the optimal bounds A, B) are computed once on construction;
/// when A > pdtol the inverse is cached as well.
template <FieldScalar S>
class GFrame {
 public:
  explicit GFrame(std::vector<Operator<S>> blocks, const Tolerances& tol = {});

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return blocks_.size(); }
  const Operator<S>& block(std::size_t j) const { return blocks_.at(j); }
  const std::vector<Operator<S>>& blocks() const { return blocks_; }
  const Tolerances& tolerances() const { return tol_; }

  const Operator<S>& frame_operator() const { return frame_operator_; }
  double lower_bound() const { return lower_; }
  double upper_bound() const { return upper_; }
  bool is_frame() const { return inverse_.has_value(); }
  bool is_parseval(double threshold = kParsevalThreshold) const;

  /// S^{-1}; throws NotAFrame when the lower bound is not above pdtol.
  const Operator<S>& inverse_frame_operator() const;

  /// Rows Lambda_0; Lambda_1; ... stacked, i.e. the matrix of the analysis
  /// operator. Used as an independent route to S = T T*.
  Operator<S> stacked_analysis() const;

 private:
  Eigen::Index dim_ = 0;
  std::vector<Operator<S>> blocks_;
  Tolerances tol_;
  Operator<S> frame_operator_;
  double lower_ = 0.0;
  double upper_ = 0.0;
  std::optional<Operator<S>> inverse_;
};

/// {Lambda_j f}
template <FieldScalar S>
BlockVector<S> analysis(const GFrame<S>& frame, const Vector<S>& f);

/// sum_j Lambda_j* g_j
template <FieldScalar S>
Vector<S> synthesis(const GFrame<S>& frame, const BlockVector<S>& g);

template <FieldScalar S>
const Operator<S>& frame_operator(const GFrame<S>& frame) {
  return frame.frame_operator();
}

/// {Lambda_j S^{-1}}; its bounds are (1/B, 1/A).
template <FieldScalar S>
GFrame<S> canonical_dual(const GFrame<S>& frame);

/// Relative errors of the two reconstructions through the canonical dual:
/// sum Lambda~_j* Lambda_j f and sum Lambda_j* Lambda~_j f.
struct ReconstructionErrors {
  double first = 0.0;
  double second = 0.0;
};

template <FieldScalar S>
ReconstructionErrors reconstruction_errors(const GFrame<S>& frame, const Vector<S>& f);

/// S_I = sum_{j in I} Lambda_j* Lambda~_j.
template <FieldScalar S>
Operator<S> partial_sum(const GFrame<S>& frame, const IndexSubset& subset);

/// Both sides of a scalar identity, kept complex so tests can also inspect the
/// imaginary part of the difference.
template <FieldScalar S>
struct ScalarIdentity {
  S lhs{};
  S rhs{};
  double residual = 0.0;  // |lhs - rhs|
  double imag_residual = 0.0;  // |Im(lhs - rhs)|
};

template <FieldScalar S>
ScalarIdentity<S> make_identity(S lhs, S rhs);

/// sum_{j in I} <Lambda~_j f, Lambda_j f> - |S_I f|^2   against
/// sum_{j in I^c} conj(<Lambda~_j f, Lambda_j f>) - |S_{I^c} f|^2,
/// each side evaluated term by term.
template <FieldScalar S>
ScalarIdentity<S> thm_t1_residual(const GFrame<S>& frame, const IndexSubset& subset, const Vector<S>& f);

/// Parseval form: sum_{I} |Lambda_j f|^2 - |S_I f|^2 against the I^c side,
/// with S_I = sum_{I} Lambda_j* Lambda_j. Throws WrongFrameKind when the frame
/// is not Parseval.
template <FieldScalar S>
ScalarIdentity<S> famous_parseval_residual(const GFrame<S>& frame, const IndexSubset& subset,
                                           const Vector<S>& f);

}  // namespace framekit
