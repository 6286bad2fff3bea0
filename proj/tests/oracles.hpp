#pragma once

// Brute-force reference computations written independently of the library
// code paths they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using QMat = std::vector<std::vector<Q>>;

inline QMat zeros(std::size_t r, std::size_t c) { return QMat(r, std::vector<Q>(c, Q(0))); }

// Rank by plain Gaussian elimination on a copy.
inline std::size_t rank(QMat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Q f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

inline QMat columns(const QMat& a, const std::vector<std::size_t>& idx) {
  QMat out = zeros(a.size(), idx.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) out[i][k] = a[i][idx[k]];
  return out;
}

// Calls fn on each k-subset of {0..n-1}; stops when fn returns true.
inline bool any_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    if (fn(s)) return true;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return false;
}

// Smallest |S| with e_row in the span of the columns Phi_S.
inline std::size_t row_sparsity(const QMat& phi, std::size_t row) {
  const std::size_t n = phi.size();
  const std::size_t m = phi[0].size();
  for (std::size_t k = 1; k <= m; ++k) {
    const bool hit = any_subset(m, k, [&](const std::vector<std::size_t>& s) {
      QMat a = columns(phi, s);
      const std::size_t base = rank(a);
      for (std::size_t i = 0; i < n; ++i) a[i].push_back(i == row ? Q(1) : Q(0));
      return rank(a) == base;
    });
    if (hit) return k;
  }
  return m + 1;
}

inline std::size_t sparsity(const QMat& phi) {
  std::size_t total = 0;
  for (std::size_t j = 0; j < phi.size(); ++j) total += row_sparsity(phi, j);
  return total;
}

// Every row vector x with Phi conj(x) = e_row and exactly `k` nonzeros.
inline std::vector<std::vector<Q>> sparsest_rows(const QMat& phi, std::size_t row) {
  const std::size_t n = phi.size();
  const std::size_t m = phi[0].size();
  const std::size_t k = row_sparsity(phi, row);
  std::vector<std::vector<Q>> found;
  any_subset(m, k, [&](const std::vector<std::size_t>& s) {
    // Solve the n x k system by elimination on the augmented matrix.
    QMat a = columns(phi, s);
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(i == row ? Q(1) : Q(0));
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
      std::size_t p = r;
      while (p < n && a[p][c] == 0) ++p;
      if (p == n) continue;
      std::swap(a[p], a[r]);
      const Q lead = a[r][c];
      for (auto& v : a[r]) v /= lead;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r || a[i][c] == 0) continue;
        const Q f = a[i][c];
        for (std::size_t q = 0; q <= k; ++q) a[i][q] -= f * a[r][q];
      }
      pivots.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < n; ++i)
      if (a[i][k] != 0) return false;
    if (pivots.size() != k) return false;  // not unique on this support
    std::vector<Q> x(m, Q(0));
    for (std::size_t p = 0; p < k; ++p) x[s[pivots[p]]] = a[p][k];
    if (std::all_of(s.begin(), s.end(), [&](std::size_t c) { return x[c] != 0; })) found.push_back(x);
    return false;
  });
  return found;
}

// Floating counterpart of row_sparsity via least squares on each support.
template <class Mat>
std::size_t float_row_sparsity(const Mat& phi, Eigen::Index row, double tol = 1e-9) {
  using S = typename Mat::Scalar;
  const Eigen::Index n = phi.rows();
  const Eigen::Index m = phi.cols();
  Eigen::Matrix<S, Eigen::Dynamic, 1> e = Eigen::Matrix<S, Eigen::Dynamic, 1>::Zero(n);
  e(row) = S(1);
  for (Eigen::Index k = 1; k <= m; ++k) {
    const bool hit = any_subset(static_cast<std::size_t>(m), static_cast<std::size_t>(k),
                                [&](const std::vector<std::size_t>& s) {
                                  Mat a(n, static_cast<Eigen::Index>(s.size()));
                                  for (std::size_t q = 0; q < s.size(); ++q)
                                    a.col(static_cast<Eigen::Index>(q)) = phi.col(static_cast<Eigen::Index>(s[q]));
                                  const auto x = a.completeOrthogonalDecomposition().solve(e).eval();
                                  return (a * x - e).norm() <= tol;
                                });
    if (hit) return static_cast<std::size_t>(k);
  }
  return static_cast<std::size_t>(m + 1);
}

template <class Mat>
std::size_t float_sparsity(const Mat& phi, double tol = 1e-9) {
  std::size_t total = 0;
  for (Eigen::Index j = 0; j < phi.rows(); ++j) total += float_row_sparsity(phi, j, tol);
  return total;
}

inline QMat random_integer_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  QMat a = zeros(r, c);
  for (auto& row : a)
    for (auto& v : row) v = Q(d(rng));
  return a;
}

}  // namespace oracle
