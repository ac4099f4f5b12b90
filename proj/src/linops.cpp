#include "framekit/linops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "framekit/errors.hpp"

namespace framekit {

std::string_view to_string(Field field) {
  return field == Field::Real ? "real" : "complex";
}

Field field_from_string(std::string_view text) {
  if (text == "real") return Field::Real;
  if (text == "complex") return Field::Complex;
  throw FrameError(ErrorCode::InvalidConfig, "unknown field '" + std::string(text) + "'");
}

namespace linops {
namespace {

template <FieldScalar S>
void require_square(const Operator<S>& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw FrameError(ErrorCode::NotSquare, std::string(what) + " is " + std::to_string(a.rows()) + "x" +
                                               std::to_string(a.cols()));
  }
}

template <FieldScalar S>
void require_same_shape(const Operator<S>& a, const Operator<S>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw FrameError(ErrorCode::ShapeMismatch, what);
  }
}

}  // namespace

template <FieldScalar S>
Operator<S> adjoint(const Operator<S>& a) {
  return a.adjoint();
}

template <FieldScalar S>
double norm(const Operator<S>& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Operator<S>> svd(a);
  return svd.singularValues()(0);
}

template <FieldScalar S>
double hermitian_defect(const Operator<S>& a) {
  require_square(a, "operator");
  return norm<S>(a - a.adjoint());
}

template <FieldScalar S>
Operator<S> symmetrize(const Operator<S>& a) {
  require_square(a, "operator");
  return (a + a.adjoint()) / 2.0;
}

template <FieldScalar S>
Operator<S> SpectralDecomposition<S>::reconstruct() const {
  return eigenvectors * eigenvalues.template cast<S>().asDiagonal() * eigenvectors.adjoint();
}

template <FieldScalar S>
SpectralDecomposition<S> hermitian_eig(const Operator<S>& a, const Tolerances& tol) {
  require_square(a, "hermitian_eig input");
  if (!a.allFinite()) throw FrameError(ErrorCode::NonFiniteEntry, "hermitian_eig input");
  double defect = hermitian_defect<S>(a);
  if (defect > tol.htol * norm<S>(a)) {
    throw FrameError(ErrorCode::NotHermitian, "defect " + std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<Operator<S>> solver(symmetrize<S>(a));
  if (solver.info() != Eigen::Success) {
    throw FrameError(ErrorCode::NotHermitian, "eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

template <FieldScalar S>
RealVector eigenvalues(const Operator<S>& a, const Tolerances& tol) {
  require_square(a, "eigenvalues input");
  double defect = hermitian_defect<S>(a);
  if (defect > tol.htol * norm<S>(a)) {
    throw FrameError(ErrorCode::NotHermitian, "defect " + std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<Operator<S>> solver(symmetrize<S>(a), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

template <FieldScalar S>
Operator<S> psd_power(const Operator<S>& a, double p, const Tolerances& tol) {
  auto eig = hermitian_eig<S>(a, tol);
  double smallest = eig.eigenvalues.size() > 0 ? eig.eigenvalues(0) : 0.0;
  if (!(smallest > tol.pdtol)) {
    throw FrameError(ErrorCode::NotPositiveDefinite, "min eigenvalue " + std::to_string(smallest));
  }
  RealVector powered = eig.eigenvalues.array().pow(p);
  Operator<S> out = eig.eigenvectors * powered.cast<S>().asDiagonal() * eig.eigenvectors.adjoint();
  return symmetrize<S>(out);
}

template <FieldScalar S>
Operator<S> orthonormal_basis(const Operator<S>& vectors, const Tolerances& tol) {
  if (vectors.cols() == 0 || vectors.rows() == 0) {
    throw FrameError(ErrorCode::ZeroSubspace, "no vectors given");
  }
  if (!vectors.allFinite()) throw FrameError(ErrorCode::NonFiniteEntry, "subspace vectors");
  Eigen::JacobiSVD<Operator<S>> svd(vectors, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  if (!(sigma(0) > tol.rktol)) {
    throw FrameError(ErrorCode::ZeroSubspace, "all vectors are numerically zero");
  }
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > tol.rktol * sigma(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

template <FieldScalar S>
Operator<S> projection(const Operator<S>& basis, const Tolerances& tol) {
  Operator<S> gram = basis.adjoint() * basis;
  double defect = norm<S>(gram - Operator<S>::Identity(basis.cols(), basis.cols()));
  if (defect > tol.rtol) {
    throw FrameError(ErrorCode::NotOrthonormal, "|B*B - I| = " + std::to_string(defect));
  }
  return symmetrize<S>(basis * basis.adjoint());
}

template <FieldScalar S>
Operator<S> range_projection(const Operator<S>& m, const Tolerances& tol) {
  try {
    return projection<S>(orthonormal_basis<S>(m, tol), tol);
  } catch (const FrameError& e) {
    if (e.code() != ErrorCode::ZeroSubspace) throw;
    return Operator<S>::Zero(m.rows(), m.rows());
  }
}

template <FieldScalar S>
LoewnerMargin loewner_check(const Operator<S>& t, const Operator<S>& lower, const Operator<S>& upper,
                            const Tolerances& tol) {
  require_square(t, "loewner_check operand");
  require_same_shape<S>(t, lower, "loewner_check: lower bound shape differs");
  require_same_shape<S>(t, upper, "loewner_check: upper bound shape differs");
  double scale = std::max({norm<S>(t), norm<S>(lower), norm<S>(upper)});
  for (const Operator<S>* op : {&t, &lower, &upper}) {
    double defect = hermitian_defect<S>(*op);
    if (defect > tol.htol * scale) {
      throw FrameError(ErrorCode::NotHermitian, "loewner_check operand defect " + std::to_string(defect));
    }
  }
  Eigen::SelfAdjointEigenSolver<Operator<S>> below(symmetrize<S>(t - lower), Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Operator<S>> above(symmetrize<S>(upper - t), Eigen::EigenvaluesOnly);
  return {below.eigenvalues()(0), above.eigenvalues()(0)};
}

double quad_bound(double a, double b, double c) {
  if (a == 0.0) throw FrameError(ErrorCode::ZeroLeadingCoefficient, "quad_bound requires a != 0");
  return (4.0 * a * c - b * b) / (4.0 * a);
}

template <FieldScalar S>
double lemma_l0_residual(const Operator<S>& v_basis, const Operator<S>& t, const Tolerances& tol) {
  require_square(t, "lemma_l0 operator");
  if (v_basis.rows() != t.rows()) {
    throw FrameError(ErrorCode::ShapeMismatch, "subspace basis and operator act on different spaces");
  }
  Operator<S> pi_v = projection<S>(v_basis, tol);
  Operator<S> pi_tv = range_projection<S>(Operator<S>(t * v_basis), tol);
  Operator<S> left = pi_v * t.adjoint();
  return norm<S>(left - left * pi_tv);
}

template <FieldScalar S>
double lemma_l2_residual(const Operator<S>& u, const Operator<S>& v) {
  require_square(u, "lemma_l2 operand");
  require_same_shape<S>(u, v, "lemma_l2: operands differ in shape");
  return norm<S>((u - v) - (u * u - v * v));
}

#define FRAMEKIT_INSTANTIATE_LINOPS(S)                                                                 \
  template Operator<S> adjoint<S>(const Operator<S>&);                                                 \
  template double norm<S>(const Operator<S>&);                                                         \
  template double hermitian_defect<S>(const Operator<S>&);                                             \
  template Operator<S> symmetrize<S>(const Operator<S>&);                                              \
  template struct SpectralDecomposition<S>;                                                            \
  template SpectralDecomposition<S> hermitian_eig<S>(const Operator<S>&, const Tolerances&);           \
  template RealVector eigenvalues<S>(const Operator<S>&, const Tolerances&);                           \
  template Operator<S> psd_power<S>(const Operator<S>&, double, const Tolerances&);                    \
  template Operator<S> orthonormal_basis<S>(const Operator<S>&, const Tolerances&);                    \
  template Operator<S> projection<S>(const Operator<S>&, const Tolerances&);                           \
  template Operator<S> range_projection<S>(const Operator<S>&, const Tolerances&);                     \
  template LoewnerMargin loewner_check<S>(const Operator<S>&, const Operator<S>&, const Operator<S>&, \
                                          const Tolerances&);                                          \
  template double lemma_l0_residual<S>(const Operator<S>&, const Operator<S>&, const Tolerances&);     \
  template double lemma_l2_residual<S>(const Operator<S>&, const Operator<S>&);

FRAMEKIT_INSTANTIATE_LINOPS(Real)
FRAMEKIT_INSTANTIATE_LINOPS(Complex)

#undef FRAMEKIT_INSTANTIATE_LINOPS

}  // namespace linops
}  // namespace framekit
