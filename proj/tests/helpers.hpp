#pragma once

#include <random>

#include "framedual/frames.hpp"
#include "oracles.hpp"

namespace testing_helpers {

using framedual::Index;

inline framedual::Matrix to_matrix(const oracle::QMat& a) {
  framedual::RationalMatrix out(static_cast<Index>(a.size()), static_cast<Index>(a[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out(static_cast<Index>(i), static_cast<Index>(j)) = framedual::Rational(a[i][j]);
  return framedual::Matrix(std::move(out));
}

inline oracle::QMat to_qmat(const framedual::Matrix& a) {
  oracle::QMat out = oracle::zeros(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = oracle::Q(a.rational()(i, j));
  return out;
}

inline framedual::RealMatrix gaussian(std::mt19937& rng, Index r, Index c) {
  std::normal_distribution<double> d;
  framedual::RealMatrix a(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) a(i, j) = d(rng);
  return a;
}

inline framedual::ComplexMatrix gaussian_complex(std::mt19937& rng, Index r, Index c) {
  std::normal_distribution<double> d;
  framedual::ComplexMatrix a(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) a(i, j) = {d(rng), d(rng)};
  return a;
}

// Example frames.
inline framedual::FrameMatrix example_2x3() {
  return framedual::FrameMatrix(framedual::Matrix(framedual::RationalMatrix{{1, -1, 0}, {1, 2, -1}}));
}

// (1/50)[[90,-12,-16],[120,9,12]]: singular values (3, 1/2).
inline framedual::FrameMatrix example_spectral() {
  using framedual::Rational;
  framedual::RationalMatrix a{{90, -12, -16}, {120, 9, 12}};
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 3; ++j) a(i, j) /= Rational(50);
  return framedual::FrameMatrix(framedual::Matrix(std::move(a)));
}

}  // namespace testing_helpers
