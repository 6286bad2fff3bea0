#pragma once

#include <optional>
#include <span>
#include <vector>

#include "framedual/frames.hpp"

namespace framedual {

// The 2x2 block [[top, top], [bottom, -bottom]] straddling a row and the next.
struct TetrisBlock {
  double top;     // sqrt(r / 2)
  double bottom;  // sqrt(1 - r / 2)
};

struct TetrisRow {
  Index ones = 0;        // number of unit columns placed in this row
  double residual = 0;   // weight in [0, 1) left for the block
  Index first_column = 0;
  std::optional<TetrisBlock> block;
  Index block_column = -1;  // left column of the block, -1 without one
};

/// Bookkeeping for a spectral tetris frame with frame operator diag(lambda).
/// Row indices are 0-based; `k_list` holds the prefix lengths k_0 = 0 < ... <
/// k_mu = n whose eigenvalue sums are integers.
struct TetrisPlan {
  std::vector<double> eigenvalues;
  Index n = 0;
  Index m = 0;
  std::vector<Index> k_list;
  Index mu = 0;
  std::vector<Index> consecutive_steps;  // i in [0, mu) with k_{i+1} = k_i + 1
  std::vector<Index> interior_unit_rows; // rows strictly inside a run that host a unit column
  Index k_hat = 0;
  std::vector<TetrisRow> rows;
};

/// Exact prefix-sum bookkeeping on rational eigenvalues.
TetrisPlan tetris_plan(std::span<const Rational> eigenvalues);
/// Floating eigenvalues; prefix sums within 1e-9 of an integer are snapped.
TetrisPlan tetris_plan(std::span<const double> eigenvalues);

FrameMatrix tetris_frame(const TetrisPlan& plan);

// Sparsity of the sparsest dual: k_hat + 2 (n - k_hat).
Index tetris_sparsity(const TetrisPlan& plan);

/// A dual of tetris_frame(plan) built from 1-sparse and 2-sparse rows; its
/// sparsity equals tetris_sparsity(plan).
FrameMatrix tetris_sparse_dual(const TetrisPlan& plan);

/// Rows j for which the standard basis vector e_j is a column, up to tol.
std::vector<Index> rows_with_unit_column(const Matrix& frame, double tol = 1e-12);

}  // namespace framedual
