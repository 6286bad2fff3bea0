#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "framedual/frames.hpp"

namespace framedual {

/// Controls the exhaustive subset searches. Rational frames are handled
/// exactly unless force_floating is set; floating decisions use `tolerance`
/// and are reported as tolerance dependent.
struct SearchOptions {
  RankTolerance tolerance;
  std::uint64_t subset_budget = 20'000'000;
  bool force_floating = false;
};

struct SparkReport {
  Index spark = 0;
  std::vector<Index> witness;  // minimal dependent column set; empty when none exists
  bool tolerance_dependent = false;
};

/// Smallest number of linearly dependent columns. A matrix whose columns are
/// all independent reports cols + 1 (n + 1 for an invertible square matrix).
SparkReport spark(const Matrix& a, const SearchOptions& options = {});

/// One row of a sparsest dual: psi^j = coefficients / scale on `support`,
/// where coefficients span ker of the row-deleted columns and scale is the
/// j-th entry of the synthesized vector.
struct RowCertificate {
  Index row = 0;
  Index spark = 0;
  std::vector<Index> support;
  std::vector<Scalar> coefficients;
  Scalar scale;
};

struct SparsityCertificate {
  std::vector<RowCertificate> rows;
  bool tolerance_dependent = false;
  // Some column of the dual is zero, so reconstruction discards coefficients.
  bool degenerate = false;

  Index total() const;
};

Index generalized_spark(const FrameMatrix& frame, Index row, const SearchOptions& options = {});

struct SparsestDual {
  FrameMatrix dual;
  SparsityCertificate certificate;
};

SparsestDual sparsest_dual(const FrameMatrix& frame, const SearchOptions& options = {});

/// Re-derives each certificate invariant from scratch against the frame.
bool verify_certificate(const FrameMatrix& frame, const SparsityCertificate& certificate,
                        double tol = kDualityTolerance);

struct SparsestDualSet {
  std::vector<FrameMatrix> duals;
  Index sparsity = 0;
  bool truncated = false;
  bool tolerance_dependent = false;
};

/// All duals attaining the minimal sparsity, sorted by flattened entries.
/// At most `limit` duals are returned; `truncated` reports whether more exist.
SparsestDualSet enumerate_sparsest_duals(const FrameMatrix& frame, std::size_t limit,
                                         const SearchOptions& options = {});

struct SparsityBounds {
  Index lower = 0;  // sum_j spark(Phi^(j))
  Index exact = 0;  // sum_j spark_j(Phi)
  Index upper = 0;  // n^2
};

SparsityBounds sparsity_bounds(const FrameMatrix& frame, const SearchOptions& options = {});

/// Inverse-adjoint of Phi_J placed on the columns J, zero elsewhere. Without
/// explicit columns the lexicographically first independent n-subset is used.
FrameMatrix biorthogonal_dual(const FrameMatrix& frame,
                              const std::optional<std::vector<Index>>& columns = std::nullopt,
                              const SearchOptions& options = {});

/// Every maximal square submatrix has full rank. Requires rows <= cols.
bool is_general_position(const Matrix& a, const SearchOptions& options = {});

/// spark(Phi^(j)) == n for every row j. Frames with this property have no
/// dual sparser than n^2.
bool projections_in_general_position(const FrameMatrix& frame, const SearchOptions& options = {});

// Visits k-subsets of {0..n-1} in lexicographic order until fn returns false.
template <class Fn>
void for_each_combination(Index n, Index k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<Index> subset(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<Index>&>(subset))) return;
    Index i = k - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++subset[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::uint64_t binomial(Index n, Index k);

}  // namespace framedual
