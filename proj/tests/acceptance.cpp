// Acceptance gate: every criterion is evaluated on seeded instances with
// dense operators assembled here from the raw frame data, then cross-checked
// against the library's own verification report. One PASS/FAIL line per
// criterion; the exit status is non-zero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>

#include "framekit/frame_file.hpp"
#include "framekit/gen.hpp"
#include "framekit/gfusion.hpp"
#include "framekit/verify.hpp"

using namespace framekit;

namespace {

constexpr double kIdentityTol = 1e-8;
constexpr double kReconTol = 1e-9;
constexpr double kOracleTol = 1e-10;
constexpr double kLemmaTol = 1e-10;
constexpr double kMarginTol = 1e-8;

/// Worst value seen against a bound, with the first offending instance.
struct Tally {
  std::size_t evaluations = 0;
  double worst_residual = 0.0;
  double worst_margin = std::numeric_limits<double>::infinity();
  bool ok = true;
  std::string first_failure;

  void residual(double value, double tol, const std::string& where) {
    ++evaluations;
    worst_residual = std::max(worst_residual, value);
    if (!(value <= tol)) fail(where + " residual " + fmt(value) + " > " + fmt(tol));
  }
  void margin(double value, double tol, const std::string& where) {
    ++evaluations;
    worst_margin = std::min(worst_margin, value);
    if (!(value >= -tol)) fail(where + " margin " + fmt(value) + " < -" + fmt(tol));
  }
  void require(bool condition, const std::string& what) {
    ++evaluations;
    if (!condition) fail(what);
  }
  void fail(const std::string& what) {
    if (ok) first_failure = what;
    ok = false;
  }
  static std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(3) << v;
    return s.str();
  }
};

template <FieldScalar S>
Operator<S> gram_projection(const Operator<S>& m) {
  Operator<S> gram = m.adjoint() * m;
  return m * gram.fullPivLu().inverse() * m.adjoint();
}

/// Range projection from a column-pivoted QR factorization.
template <FieldScalar S>
Operator<S> qr_projection(const Operator<S>& m) {
  Eigen::ColPivHouseholderQR<Operator<S>> qr(m);
  Operator<S> q = qr.householderQ() * Operator<S>::Identity(m.rows(), qr.rank());
  return q * q.adjoint();
}

template <FieldScalar S>
Operator<S> hermitian_part(const Operator<S>& m) {
  return (m + m.adjoint()) / 2.0;
}

template <FieldScalar S>
double min_eig(const Operator<S>& m) {
  Eigen::SelfAdjointEigenSolver<Operator<S>> solver(hermitian_part<S>(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

template <FieldScalar S>
double op_norm(const Operator<S>& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Operator<S>> svd(m);
  return svd.singularValues()(0);
}

template <FieldScalar S>
S inner(const Vector<S>& x, const Vector<S>& y) {
  return y.dot(x);  // <x, y>, linear in x
}

/// Dense view of a g-fusion frame built from its components only.
template <FieldScalar S>
struct DenseFusion {
  Eigen::Index dim = 0;
  std::vector<double> w2;
  std::vector<Operator<S>> lp;  // Lambda_j pi_j
  std::vector<Operator<S>> ld;  // Lambda~_j pi~_j = Lambda_j pi_j S^-1 pi~_j
  Operator<S> s, inv, inv_sqrt;
  double lower = 0.0, upper = 0.0;

  explicit DenseFusion(const GFusionFrame<S>& f) : dim(f.dim()) {
    s = Operator<S>::Zero(dim, dim);
    for (std::size_t j = 0; j < f.size(); ++j) {
      const auto& c = f.component(j);
      w2.push_back(c.weight * c.weight);
      lp.push_back(c.lambda * gram_projection<S>(c.basis));
      s += w2.back() * lp.back().adjoint() * lp.back();
    }
    inv = s.fullPivLu().inverse();
    Eigen::SelfAdjointEigenSolver<Operator<S>> eig(hermitian_part<S>(s));
    lower = eig.eigenvalues()(0);
    upper = eig.eigenvalues()(dim - 1);
    inv_sqrt = eig.operatorInverseSqrt();
    for (std::size_t j = 0; j < f.size(); ++j) {
      Operator<S> pi_dual = gram_projection<S>(Operator<S>(inv * f.component(j).basis));
      ld.push_back(lp[j] * inv * pi_dual);
    }
  }

  std::size_t size() const { return lp.size(); }

  /// sum_{j in I} v_j^2 pi_j Lambda_j* Lambda~_j pi~_j
  Operator<S> s_partial(const IndexSubset& in) const {
    Operator<S> out = Operator<S>::Zero(dim, dim);
    for (auto j : in) out += w2[j] * lp[j].adjoint() * ld[j];
    return out;
  }
  /// sum_{j in I} v_j^2 pi_j Lambda_j* Lambda_j pi_j
  Operator<S> m_partial(const IndexSubset& in) const {
    Operator<S> out = Operator<S>::Zero(dim, dim);
    for (auto j : in) out += w2[j] * lp[j].adjoint() * lp[j];
    return out;
  }
  double energy(const IndexSubset& in, const Vector<S>& f) const {
    double total = 0.0;
    for (auto j : in) total += w2[j] * (lp[j] * f).squaredNorm();
    return total;
  }
  double dual_energy(const Vector<S>& f) const {
    double total = 0.0;
    for (std::size_t j = 0; j < size(); ++j) total += w2[j] * (ld[j] * f).squaredNorm();
    return total;
  }
};

/// Dense view of a g-frame: S = sum Lambda_j* Lambda_j, Lambda~_j = Lambda_j S^-1.
template <FieldScalar S>
struct DenseGFrame {
  std::vector<Operator<S>> blocks, duals;
  Operator<S> s, inv;

  explicit DenseGFrame(const GFrame<S>& f) : blocks(f.blocks()) {
    s = Operator<S>::Zero(f.dim(), f.dim());
    for (const auto& b : blocks) s += b.adjoint() * b;
    inv = s.fullPivLu().inverse();
    for (const auto& b : blocks) duals.push_back(b * inv);
  }
  Operator<S> s_partial(const IndexSubset& in) const {
    Operator<S> out = Operator<S>::Zero(s.rows(), s.cols());
    for (auto j : in) out += blocks[j].adjoint() * duals[j];
    return out;
  }
};

double f_scale(double squared_norm) {
  return std::max(1.0, squared_norm);
}

struct Criteria {
  Tally c[11];
};

template <FieldScalar S>
void check_gframe(const GFrame<S>& frame, const std::vector<IndexSubset>& subsets,
                  const std::vector<Vector<S>>& samples, const std::string& where, Criteria& out, bool parseval) {
  DenseGFrame<S> d(frame);
  const std::size_t n = frame.size();
  // Oracle equivalence: summed frame operator against the stacked product.
  Operator<S> stacked(0, frame.dim());
  for (const auto& b : frame.blocks()) {
    Operator<S> grown(stacked.rows() + b.rows(), frame.dim());
    grown << stacked, b;
    stacked = grown;
  }
  Operator<S> dense = stacked.adjoint() * stacked;
  out.c[7].residual(op_norm<S>(Operator<S>(frame.frame_operator() - dense)) / op_norm<S>(dense), kOracleTol,
                    where + " g-frame operator");

  for (const auto& f : samples) {
    double scale = f.norm();
    Vector<S> first = Vector<S>::Zero(frame.dim()), second = Vector<S>::Zero(frame.dim());
    for (std::size_t j = 0; j < n; ++j) {
      first += d.blocks[j].adjoint() * (d.duals[j] * f);
      second += d.duals[j].adjoint() * (d.blocks[j] * f);
    }
    out.c[3].residual((first - f).norm() / scale, kReconTol, where + " g-frame dual reconstruction");
    out.c[3].residual((second - f).norm() / scale, kReconTol, where + " g-frame dual reconstruction (swapped)");
    auto lib = reconstruction_errors<S>(frame, f);
    out.c[3].residual(std::max(lib.first, lib.second), kReconTol, where + " library g-frame reconstruction");
  }

  for (const auto& in : subsets) {
    IndexSubset rest = in.complement(n);
    Operator<S> u = d.s_partial(in);
    Operator<S> v = d.s_partial(rest);
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& f = samples[k];
      double fs = f_scale(f.squaredNorm());
      S lhs{}, rhs{};
      for (auto j : in) lhs += inner<S>(Vector<S>(d.duals[j] * f), Vector<S>(d.blocks[j] * f));
      for (auto j : rest) rhs += Eigen::numext::conj(inner<S>(Vector<S>(d.duals[j] * f), Vector<S>(d.blocks[j] * f)));
      lhs -= S((u * f).squaredNorm());
      rhs -= S((v * f).squaredNorm());
      std::string at = where + " I=" + in.to_string() + " sample " + std::to_string(k);
      out.c[1].residual(std::abs(lhs - rhs) / fs, kIdentityTol, at);
      out.c[1].residual(std::abs(std::imag(Complex(lhs - rhs))) / fs, kIdentityTol, at + " (imaginary part)");
      auto lib = thm_t1_residual<S>(frame, in, f);
      out.c[1].residual(lib.residual / fs, kIdentityTol, at + " library");
      out.c[1].residual(lib.imag_residual / fs, kIdentityTol, at + " library (imaginary part)");
    }
    if (parseval) {
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(u.template cast<Complex>(), false);
      for (const auto& lambda : ces.eigenvalues()) {
        out.c[8].margin(lambda.real(), kMarginTol, where + " Parseval g-frame I=" + in.to_string());
        out.c[8].margin(1.0 - lambda.real(), kMarginTol, where + " Parseval g-frame I=" + in.to_string());
        out.c[8].residual(std::abs(lambda.imag()), kMarginTol, where + " imaginary eigenvalue part");
      }
    }
  }
}

template <FieldScalar S>
void check_gfusion(const GFusionFrame<S>& frame, const std::vector<IndexSubset>& subsets,
                   const std::vector<Vector<S>>& samples, const std::string& where, Criteria& out) {
  DenseFusion<S> d(frame);
  const std::size_t n = frame.size();
  const Eigen::Index dim = frame.dim();
  const double s_scale = std::max(1.0, d.upper);
  const Operator<S> id = Operator<S>::Identity(dim, dim);

  // Oracle equivalence: summation (library cache) against a dense stacked analysis matrix.
  Operator<S> stacked(0, dim);
  for (std::size_t j = 0; j < n; ++j) {
    Operator<S> block = std::sqrt(d.w2[j]) * d.lp[j];
    Operator<S> grown(stacked.rows() + block.rows(), dim);
    grown << stacked, block;
    stacked = grown;
  }
  Operator<S> dense = stacked.adjoint() * stacked;
  double dense_norm = op_norm<S>(dense);
  out.c[7].residual(op_norm<S>(Operator<S>(frame.frame_operator() - dense)) / dense_norm, kOracleTol,
                    where + " g-fusion operator");
  Operator<S> lib_stacked = frame.stacked_analysis();
  out.c[7].residual(op_norm<S>(Operator<S>(lib_stacked.adjoint() * lib_stacked - frame.frame_operator())) / dense_norm,
                    kOracleTol, where + " library stacked route");

  // Reconstructions through S^-1 and through the canonical dual, both orderings.
  for (const auto& f : samples) {
    double scale = f.norm();
    Vector<S> r4a = Vector<S>::Zero(dim), r4b = Vector<S>::Zero(dim);
    Vector<S> r5a = Vector<S>::Zero(dim), r5b = Vector<S>::Zero(dim);
    Vector<S> sinv_f = d.inv * f;
    for (std::size_t j = 0; j < n; ++j) {
      r4a += d.w2[j] * (d.lp[j].adjoint() * (d.lp[j] * sinv_f));
      r4b += d.inv * (d.w2[j] * (d.lp[j].adjoint() * (d.lp[j] * f)));
      r5a += d.w2[j] * (d.lp[j].adjoint() * (d.ld[j] * f));
      r5b += d.w2[j] * (d.ld[j].adjoint() * (d.lp[j] * f));
    }
    out.c[3].residual((r4a - f).norm() / scale, kReconTol, where + " frame-operator reconstruction");
    out.c[3].residual((r4b - f).norm() / scale, kReconTol, where + " frame-operator reconstruction (swapped)");
    out.c[3].residual((r5a - f).norm() / scale, kReconTol, where + " dual reconstruction");
    out.c[3].residual((r5b - f).norm() / scale, kReconTol, where + " dual reconstruction (swapped)");
    auto e4 = frame_operator_reconstruction_errors<S>(frame, f);
    auto e5 = dual_reconstruction_errors<S>(frame, gf_canonical_dual<S>(frame), f);
    out.c[3].residual(std::max({e4.first, e4.second, e5.first, e5.second}), kReconTol,
                      where + " library reconstruction");
    double quad = std::real(inner<S>(sinv_f, f));
    out.c[3].residual(std::abs(quad - d.dual_energy(f)) / f.squaredNorm(), kIdentityTol,
                      where + " inverse quadratic form");
    out.c[3].residual(inverse_quadratic_residual<S>(frame, f) / f.squaredNorm(), kIdentityTol,
                      where + " library inverse quadratic form");
  }

  const double inv_norm = op_norm<S>(d.inv);
  for (const auto& in : subsets) {
    IndexSubset rest = in.complement(n);
    std::string at = where + " I=" + in.to_string();
    Operator<S> s_in = d.s_partial(in), s_out = d.s_partial(rest);
    Operator<S> m_in = d.m_partial(in), m_out = d.m_partial(rest);

    // Complementary operators: u + v = id and u - v = u^2 - v^2.
    double u_scale = std::max(1.0, op_norm<S>(s_in));
    out.c[9].residual(op_norm<S>(Operator<S>(s_in + s_out - id)) / u_scale, kLemmaTol, at + " u + v = id");
    out.c[9].residual(op_norm<S>(Operator<S>((s_in - s_out) - (s_in * s_in - s_out * s_out))) / (u_scale * u_scale),
                      kLemmaTol, at + " u - v = u^2 - v^2");

    // General-frame operator sandwich: 0 <= M_I - M_I S^-1 M_I <= S/4.
    Operator<S> gap = m_in - m_in * d.inv * m_in;
    out.c[5].margin(min_eig<S>(gap) / s_scale, kMarginTol, at + " lower sandwich");
    out.c[5].margin(min_eig<S>(Operator<S>(0.25 * d.s - gap)) / s_scale, kMarginTol, at + " upper sandwich");

    // Corrected final corollary: S/2 <= M_I S^-1 M_I + M_c S^-1 M_c <= 3S/2.
    Operator<S> plus = m_in * d.inv * m_in + m_out * d.inv * m_out;
    out.c[6].margin(min_eig<S>(Operator<S>(plus - 0.5 * d.s)) / s_scale, kMarginTol, at + " plus form lower");
    out.c[6].margin(min_eig<S>(Operator<S>(1.5 * d.s - plus)) / s_scale, kMarginTol, at + " plus form upper");
    if (in.empty()) {
      Operator<S> minus = m_in * d.inv * m_in - m_out * d.inv * m_out;
      out.c[6].require(min_eig<S>(Operator<S>(minus - 0.5 * d.s)) < -kMarginTol * s_scale,
                       at + " printed minus form should fail for the empty subset");
    }

    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& f = samples[k];
      double fs = f_scale(f.squaredNorm());
      std::string ats = at + " sample " + std::to_string(k);

      // Identity with the canonical dual, evaluated as printed.
      S lhs{}, rhs{};
      for (auto j : in) lhs += d.w2[j] * inner<S>(Vector<S>(d.ld[j] * f), Vector<S>(d.lp[j] * f));
      for (auto j : rest) {
        rhs += d.w2[j] * Eigen::numext::conj(inner<S>(Vector<S>(d.ld[j] * f), Vector<S>(d.lp[j] * f)));
      }
      lhs -= S((s_in * f).squaredNorm());
      rhs -= S((s_out * f).squaredNorm());
      out.c[2].residual(std::abs(lhs - rhs) / fs, kIdentityTol, ats + " dual identity");
      out.c[2].residual(std::abs(std::imag(Complex(lhs - rhs))) / fs, kIdentityTol, ats + " dual identity (imag)");

      // M_I identity.
      double mi_lhs = d.energy(in, f) - d.dual_energy(Vector<S>(m_in * f));
      double mi_rhs = d.energy(rest, f) - d.dual_energy(Vector<S>(m_out * f));
      out.c[2].residual(std::abs(mi_lhs - mi_rhs) / fs, kIdentityTol, ats + " M_I identity");

      // Norm identity with S^-1/2 and the three-quarter lower bound.
      double t33_lhs = d.energy(in, f) + (d.inv_sqrt * (m_out * f)).squaredNorm();
      double t33_rhs = d.energy(rest, f) + (d.inv_sqrt * (m_in * f)).squaredNorm();
      out.c[5].residual(std::abs(t33_lhs - t33_rhs) / fs, kIdentityTol, ats + " S^-1/2 identity");
      out.c[5].margin((t33_lhs - 0.75 / inv_norm * f.squaredNorm()) / (fs * s_scale), kMarginTol,
                      ats + " three-quarter bound");
    }
  }
}

/// Parseval g-fusion frame: sandwich, two-part bounds, pointwise bound and spectrum.
template <FieldScalar S>
void check_parseval_gfusion(const GFusionFrame<S>& frame, const std::vector<IndexSubset>& subsets,
                            const std::vector<Vector<S>>& samples, const std::string& where, Criteria& out) {
  DenseFusion<S> d(frame);
  const std::size_t n = frame.size();
  const Eigen::Index dim = frame.dim();
  const Operator<S> id = Operator<S>::Identity(dim, dim);
  out.c[4].residual(op_norm<S>(Operator<S>(d.s - id)), kIdentityTol, where + " Parseval frame operator");
  for (const auto& in : subsets) {
    IndexSubset rest = in.complement(n);
    std::string at = where + " I=" + in.to_string();
    Operator<S> s_in = d.s_partial(in), s_out = d.s_partial(rest);
    out.c[4].residual(op_norm<S>(Operator<S>(s_in - s_in.adjoint())), kIdentityTol, at + " S_I self-adjoint");

    Operator<S> gap = s_in - s_in * s_in;
    out.c[4].margin(min_eig<S>(gap), kMarginTol, at + " 0 <= S_I - S_I^2");
    out.c[4].margin(min_eig<S>(Operator<S>(0.25 * id - gap)), kMarginTol, at + " S_I - S_I^2 <= id/4");
    Operator<S> squares = s_in * s_in + s_out * s_out;
    out.c[4].margin(min_eig<S>(Operator<S>(squares - 0.5 * id)), kMarginTol, at + " id/2 <= squares");
    out.c[4].margin(min_eig<S>(Operator<S>(1.5 * id - squares)), kMarginTol, at + " squares <= 3id/2");
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& f = samples[k];
      double value = d.energy(in, f) + (s_out * f).squaredNorm();
      out.c[4].margin((value - 0.75 * f.squaredNorm()) / f_scale(f.squaredNorm()), kMarginTol,
                      at + " sample " + std::to_string(k) + " pointwise 3/4 bound");
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(s_in.template cast<Complex>(), false);
    for (const auto& lambda : ces.eigenvalues()) {
      out.c[8].margin(lambda.real(), kMarginTol, at + " spectrum lower");
      out.c[8].margin(1.0 - lambda.real(), kMarginTol, at + " spectrum upper");
      out.c[8].residual(std::abs(lambda.imag()), kMarginTol, at + " imaginary eigenvalue part");
    }
  }
}

template <FieldScalar S>
bool same_fusion(const GFusionFrame<S>& a, const GFusionFrame<S>& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto& x = a.component(j);
    const auto& y = b.component(j);
    if (x.weight != y.weight || x.basis != y.basis || x.lambda != y.lambda) return false;
  }
  return true;
}

template <FieldScalar S>
bool same_gframe(const GFrame<S>& a, const GFrame<S>& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a.block(j) != b.block(j)) return false;
  }
  return true;
}

template <FieldScalar S>
void run_field(Criteria& out) {
  const std::string field(to_string(field_of<S>));
  for (Eigen::Index dim = 2; dim <= 8; ++dim) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const std::size_t n = 3 + seed % 4;  // 3..6 components
      const auto components = suite_components(dim, n);
      std::vector<Eigen::Index> codims;
      for (const auto& c : components) codims.push_back(c.codomain_dim);
      const GenSpec spec{dim, components, field_of<S>, seed};
      const std::string where = field + " dim " + std::to_string(dim) + " seed " + std::to_string(seed);

      auto gframe = random_gframe<S>(dim, codims, seed);
      auto pgframe = random_parseval_gframe<S>(dim, codims, seed);
      auto fusion = random_gfusion<S>(spec);
      auto pfusion = parsevalize<S>(fusion);

      auto subsets = enumerate_subsets(n, seed);
      std::vector<Vector<S>> samples;
      Rng rng(seed, 0xF00D);
      for (int k = 0; k < 8; ++k) samples.push_back(rng.vector<S>(dim));

      check_gframe<S>(gframe, subsets, samples, where, out, false);
      check_gframe<S>(pgframe, subsets, samples, where + " (Parseval)", out, true);
      check_gfusion<S>(fusion, subsets, samples, where, out);
      check_parseval_gfusion<S>(pfusion, subsets, samples, where, out);

      // Determinism and bit-exact round trips.
      out.c[10].require(same_gframe<S>(gframe, random_gframe<S>(dim, codims, seed)), where + " g-frame regenerated");
      out.c[10].require(same_gframe<S>(pgframe, random_parseval_gframe<S>(dim, codims, seed)),
                        where + " Parseval g-frame regenerated");
      out.c[10].require(same_fusion<S>(fusion, random_gfusion<S>(spec)), where + " g-fusion regenerated");
      out.c[10].require(same_fusion<S>(pfusion, random_parseval_gfusion<S>(spec)),
                        where + " Parseval g-fusion regenerated");
      out.c[10].require(same_fusion<S>(fusion, std::get<GFusionFrame<S>>(parse_frame(serialize_frame(fusion)))),
                        where + " g-fusion round trip");
      out.c[10].require(same_fusion<S>(pfusion, std::get<GFusionFrame<S>>(parse_frame(serialize_frame(pfusion)))),
                        where + " Parseval g-fusion round trip");
      out.c[10].require(same_gframe<S>(gframe, std::get<GFrame<S>>(parse_frame(serialize_frame(gframe)))),
                        where + " g-frame round trip");
    }
  }

  // Subspace lemma on seeded (V, T) pairs: library value and a normal-equation oracle.
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng(7000 + k, 1);
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(k % 7);
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(k % static_cast<std::uint64_t>(n));
    Operator<S> v = linops::orthonormal_basis<S>(rng.matrix<S>(n, m));
    Operator<S> t = rng.matrix<S>(n, n);
    double t_norm = op_norm<S>(t);
    std::string at = field + " pair " + std::to_string(k);
    out.c[9].residual(linops::lemma_l0_residual<S>(v, t) / t_norm, kLemmaTol, at + " library");
    Operator<S> left = gram_projection<S>(v) * t.adjoint();
    Operator<S> right = left * qr_projection<S>(Operator<S>(t * v));
    out.c[9].residual(op_norm<S>(Operator<S>(left - right)) / t_norm, kLemmaTol, at + " oracle");
  }

  // Scalar quadratic bound on seeded self-adjoint u with |u| <= 10 and unit f.
  Rng rng(424242, 2);
  for (int k = 0; k < 1000; ++k) {
    const Eigen::Index n = 2 + k % 5;
    Operator<S> g = rng.matrix<S>(n, n);
    Operator<S> u = hermitian_part<S>(g);
    u *= rng.uniform(0.0, 10.0) / op_norm<S>(u);
    double a, b, c;
    if (k < 3) {
      const double fixed[3][3] = {{1, -1, 1}, {2, -2, 1}, {-1, 1, 0}};
      a = fixed[k][0], b = fixed[k][1], c = fixed[k][2];
    } else {
      a = rng.uniform(0.1, 3.0) * (rng.uniform() < 0.5 ? -1 : 1);
      b = rng.uniform(-3, 3);
      c = rng.uniform(-3, 3);
    }
    Vector<S> f = rng.vector<S>(n).normalized();
    Operator<S> q = a * u * u + b * u + c * Operator<S>::Identity(n, n);
    double value = std::real(inner<S>(Vector<S>(q * f), f));
    double bound = linops::quad_bound(a, b, c);
    double u_norm = op_norm<S>(u);
    double tol = 1e-12 * (std::abs(a) * u_norm * u_norm + std::abs(b) * u_norm + std::abs(c));
    double slack = a > 0 ? value - bound : bound - value;
    out.c[9].margin(slack, tol, field + " quadratic sample " + std::to_string(k));
  }
}

/// Library suite results must agree with the criterion's own thresholds.
void suite_residual(Tally& t, const RunReport& r, CheckId id, double tol) {
  const auto* c = r.find(id);
  if (c == nullptr) return t.fail(std::string("suite lacks ") + std::string(to_string(id)));
  t.require(c->pass && c->instances > 0, std::string("suite check ") + std::string(to_string(id)) + " failed");
  if (c->max_residual) t.residual(*c->max_residual, tol, std::string("suite ") + std::string(to_string(id)));
}

void suite_margin(Tally& t, const RunReport& r, CheckId id, double tol) {
  const auto* c = r.find(id);
  if (c == nullptr) return t.fail(std::string("suite lacks ") + std::string(to_string(id)));
  t.require(c->pass && c->instances > 0, std::string("suite check ") + std::string(to_string(id)) + " failed");
  if (c->min_margin) t.margin(*c->min_margin, tol, std::string("suite ") + std::string(to_string(id)));
}

int run_cli(const std::string& args) {
  std::string cmd = "\"" FRAMEKIT_CLI_PATH "\" " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
  Criteria out;
  run_field<Real>(out);
  run_field<Complex>(out);

  const SuitePlan plan;
  RunReport suite = run_suite(plan);
  suite_residual(out.c[1], suite, CheckId::ThmT1, kIdentityTol);
  suite_residual(out.c[2], suite, CheckId::ThmTg1, kIdentityTol);
  suite_residual(out.c[2], suite, CheckId::ThmFinalMi, kIdentityTol);
  suite_residual(out.c[3], suite, CheckId::Eq4Recon, kReconTol);
  suite_residual(out.c[3], suite, CheckId::Eq5DualRecon, kReconTol);
  suite_residual(out.c[3], suite, CheckId::Eq6Quadform, kIdentityTol);
  suite_margin(out.c[4], suite, CheckId::Cor2Sandwich, kMarginTol);
  suite_margin(out.c[4], suite, CheckId::Thm38II, kMarginTol);
  suite_margin(out.c[4], suite, CheckId::Cor1ThreeQuarters, kMarginTol);
  suite_residual(out.c[4], suite, CheckId::Cor1Identity, kIdentityTol);
  suite_residual(out.c[5], suite, CheckId::ThmT33, kIdentityTol);
  suite_margin(out.c[5], suite, CheckId::Cor3Sandwich, kMarginTol);
  suite_margin(out.c[5], suite, CheckId::Cor34Sinv, kMarginTol);
  suite_margin(out.c[6], suite, CheckId::Cor39Plus, kMarginTol);
  const auto* probe = suite.find(CheckId::Cor39MinusProbe);
  out.c[6].require(probe != nullptr && !probe->witnesses.empty(), "default plan records no minus-form witness");
  suite_margin(out.c[8], suite, CheckId::SpectrumRemark, kMarginTol);
  suite_residual(out.c[9], suite, CheckId::LemmaL0, kLemmaTol);
  suite_residual(out.c[9], suite, CheckId::LemmaL2, kLemmaTol);

  out.c[10].require(suite.pass, "default in-process suite failed");
  RunReport again = run_suite(plan);
  again.wall_seconds = suite.wall_seconds;
  out.c[10].require(again == suite, "default suite is not reproducible");
  auto path = std::filesystem::temp_directory_path() / "framekit_acceptance.frame";
  auto sample = random_gfusion<Complex>(GenSpec{5, suite_components(5, 4), Field::Complex, 77});
  save_frame(sample, path);
  out.c[10].require(same_fusion<Complex>(sample, std::get<GFusionFrame<Complex>>(load_frame(path))),
                    "file round trip");
  std::filesystem::remove(path);
  out.c[10].require(run_cli("verify") == 0, "`framekit verify` with defaults did not exit 0");

  const char* names[11] = {
      "",
      "g-frame partial-sum identity with conjugate (THM_T1), |lhs-rhs| <= 1e-8 max(1,|f|^2), imaginary part <= 1e-8",
      "g-fusion identities (THM_TG1, THM_FINAL_MI) <= 1e-8 max(1,|f|^2)",
      "reconstructions (g-frame dual, S^-1, g-fusion dual) <= 1e-9 relative; inverse quadratic form <= 1e-8 |f|^2",
      "Parseval inequalities (COR2_SANDWICH, THM38_II, COR1_34BOUND) margins >= -1e-8",
      "general-frame inequalities (COR3_SANDWICH, THM_T33, COR_34_SINV) within 1e-8",
      "corrected final corollary passes everywhere; printed minus form has a witness",
      "frame operator by summation equals the stacked synthesis product within 1e-10 relative",
      "Parseval partial-sum spectra lie in [-1e-8, 1+1e-8]",
      "subspace lemma <= 1e-10 |T| (100 pairs per field), u+v=id identity <= 1e-10, quadratic bound on 1000 samples",
      "determinism, bit-exact frame round trip, default `verify` exits 0",
  };
  bool all = true;
  for (int k = 1; k <= 10; ++k) {
    const Tally& t = out.c[k];
    all = all && t.ok;
    std::cout << (t.ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << k << ": " << names[k] << " ["
              << t.evaluations << " evaluations";
    if (t.worst_residual > 0) std::cout << ", max residual " << Tally::fmt(t.worst_residual);
    if (std::isfinite(t.worst_margin)) std::cout << ", min margin " << Tally::fmt(t.worst_margin);
    std::cout << "]\n";
    if (!t.ok) std::cout << "     first failure: " << t.first_failure << '\n';
  }
  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << '\n';
  return all ? 0 : 1;
}
