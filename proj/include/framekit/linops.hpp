#pragma once

#include <complex>
#include <concepts>
#include <string_view>

#include <Eigen/Dense>

#include "framekit/tolerance.hpp"

namespace framekit {

using Real = double;
using Complex = std::complex<double>;

enum class Field { Real, Complex };

std::string_view to_string(Field field);
Field field_from_string(std::string_view text);

template <class S>
concept FieldScalar = std::same_as<S, Real> || std::same_as<S, Complex>;

template <FieldScalar S>
inline constexpr Field field_of = std::same_as<S, Real> ? Field::Real : Field::Complex;

template <FieldScalar S>
using Operator = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <FieldScalar S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using RealVector = Eigen::VectorXd;

namespace linops {

/// <x, y>, linear in the first argument.
template <FieldScalar S>
S inner(const Vector<S>& x, const Vector<S>& y) {
  return y.dot(x);
}

template <FieldScalar S>
Operator<S> identity(Eigen::Index n) {
  return Operator<S>::Identity(n, n);
}

template <FieldScalar S>
bool all_finite(const Operator<S>& a) {
  return a.allFinite();
}

/// Conjugate transpose.
template <FieldScalar S>
Operator<S> adjoint(const Operator<S>& a);

/// Largest singular value.
template <FieldScalar S>
double norm(const Operator<S>& a);

template <FieldScalar S>
double hermitian_defect(const Operator<S>& a);

/// (A + A*) / 2, exactly Hermitian.
template <FieldScalar S>
Operator<S> symmetrize(const Operator<S>& a);

template <FieldScalar S>
struct SpectralDecomposition {
  RealVector eigenvalues;   // ascending
  Operator<S> eigenvectors;  // unitary, column i pairs with eigenvalues[i]

  Operator<S> reconstruct() const;
};

/// Eigendecomposition of a Hermitian operator. The input is symmetrized
/// first; a Hermitian defect above htol * |A| raises NotHermitian.
template <FieldScalar S>
SpectralDecomposition<S> hermitian_eig(const Operator<S>& a, const Tolerances& tol = {});

template <FieldScalar S>
RealVector eigenvalues(const Operator<S>& a, const Tolerances& tol = {});

/// A^p for Hermitian positive definite A, through the spectral decomposition.
/// Raises NotPositiveDefinite when the smallest eigenvalue is at or below pdtol.
template <FieldScalar S>
Operator<S> psd_power(const Operator<S>& a, double p, const Tolerances& tol = {});

/// Orthonormal basis (as columns) of the span of the columns of `vectors`.
/// Numerical rank uses the cut rktol * sigma_max.
template <FieldScalar S>
Operator<S> orthonormal_basis(const Operator<S>& vectors, const Tolerances& tol = {});

/// Orthogonal projection B B* onto the span of an orthonormal-column basis.
template <FieldScalar S>
Operator<S> projection(const Operator<S>& basis, const Tolerances& tol = {});

/// Orthogonal projection onto the column range of `m`; the zero operator
/// when that range is numerically trivial.
template <FieldScalar S>
Operator<S> range_projection(const Operator<S>& m, const Tolerances& tol = {});

struct LoewnerMargin {
  double lower_margin = 0.0;  // min eig(T - L)
  double upper_margin = 0.0;  // min eig(U - T)

  bool holds(double tol) const { return lower_margin >= -tol && upper_margin >= -tol; }
};

/// Margins of the two-sided order statement L <= T <= U.
template <FieldScalar S>
LoewnerMargin loewner_check(const Operator<S>& t, const Operator<S>& lower, const Operator<S>& upper,
                            const Tolerances& tol = {});

/// Extreme value (4ac - b^2) / (4a) of the quadratic a x^2 + b x + c: a lower
/// bound of <(a u^2 + b u + c) f, f> over unit f when a > 0, an upper bound when a < 0.
double quad_bound(double a, double b, double c);

/// | pi_V T* - pi_V T* pi_{TV} | for V spanned by the orthonormal columns of v_basis.
template <FieldScalar S>
double lemma_l0_residual(const Operator<S>& v_basis, const Operator<S>& t, const Tolerances& tol = {});

/// | (u - v) - (u^2 - v^2) |; vanishes whenever u + v = id.
template <FieldScalar S>
double lemma_l2_residual(const Operator<S>& u, const Operator<S>& v);

}  // namespace linops
}  // namespace framekit
