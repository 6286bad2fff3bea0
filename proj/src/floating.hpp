#pragma once

#include <Eigen/Dense>

#include "framedual/numerics.hpp"

namespace framedual::detail {

template <class S>
using Dense = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
Eigen::VectorXd singular_values_of(const Dense<S>& a) {
  if (a.rows() == 0 || a.cols() == 0) return Eigen::VectorXd();
  Eigen::JacobiSVD<Dense<S>> svd(a);
  return svd.singularValues();
}

template <class S>
Index floating_rank(const Dense<S>& a, const RankTolerance& tol) {
  const Eigen::VectorXd sigma = singular_values_of<S>(a);
  if (sigma.size() == 0) return 0;
  const double threshold = tol.threshold(sigma(0), a.rows(), a.cols());
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > threshold) ++rank;
  return rank;
}

// Orthonormal basis of the numerical kernel: trailing right singular vectors.
template <class S>
Dense<S> floating_nullspace(const Dense<S>& a, const RankTolerance& tol) {
  const Index n = a.cols();
  if (a.rows() == 0) return Dense<S>::Identity(n, n);
  Eigen::JacobiSVD<Dense<S>> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  Index rank = 0;
  if (sigma.size() > 0) {
    const double threshold = tol.threshold(sigma(0), a.rows(), a.cols());
    for (Index i = 0; i < sigma.size(); ++i)
      if (sigma(i) > threshold) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

template <class S>
Dense<S> select_columns(const Dense<S>& a, std::span<const Index> columns) {
  Dense<S> out(a.rows(), static_cast<Index>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) out.col(static_cast<Index>(k)) = a.col(columns[k]);
  return out;
}

template <class S>
Dense<S> remove_row(const Dense<S>& a, Index row) {
  Dense<S> out(a.rows() - 1, a.cols());
  out.topRows(row) = a.topRows(row);
  out.bottomRows(a.rows() - row - 1) = a.bottomRows(a.rows() - row - 1);
  return out;
}

// Calls fn with the Real or Complex storage of a; Rational input is first
// converted to Real.
template <class Fn>
decltype(auto) visit_floating(const Matrix& a, Fn&& fn) {
  if (a.field() == Field::Complex) return fn(a.complex());
  if (a.field() == Field::Real) return fn(a.real());
  return fn(RealMatrix(a.to_real()));
}

}  // namespace framedual::detail
