#pragma once

#include <complex>
#include <vector>

#include "framekit/gen.hpp"
#include "framekit/linops.hpp"

namespace framekit::testing {

template <FieldScalar S>
Operator<S> mat(Eigen::Index rows, Eigen::Index cols, std::initializer_list<double> row_major) {
  Operator<S> m(rows, cols);
  auto it = row_major.begin();
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = S(*it++);
  }
  return m;
}

template <FieldScalar S>
Vector<S> vec(std::initializer_list<double> values) {
  Vector<S> v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = S(x);
  return v;
}

template <FieldScalar S>
Operator<S> diag(std::initializer_list<double> values) {
  return vec<S>(values).asDiagonal();
}

/// Largest absolute entry of a - b: an oracle that shares no code with linops::norm.
template <class A, class B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline std::vector<Eigen::Index> codims_for(const std::vector<ComponentSpec>& specs) {
  std::vector<Eigen::Index> out;
  for (const auto& c : specs) out.push_back(c.codomain_dim);
  return out;
}


}  // namespace framekit::testing
