#pragma once

#include "framedual/numerics.hpp"

namespace framedual {

/// A full-rank n x m synthesis matrix (m >= n); its columns are the frame
/// vectors. Construction throws RankDeficient for anything that is not a frame.
class FrameMatrix {
 public:
  explicit FrameMatrix(Matrix mat, const RankTolerance& tol = {});

  const Matrix& matrix() const noexcept { return mat_; }
  Field field() const { return mat_.field(); }
  Index n() const { return mat_.rows(); }
  Index m() const { return mat_.cols(); }
  Index redundancy_gap() const { return m() - n(); }

 private:
  Matrix mat_;
};

struct FrameBounds {
  double lower;
  double upper;
};

FrameBounds frame_bounds(const FrameMatrix& frame);

// Phi Phi^*; exact for rational frames.
Matrix frame_operator(const FrameMatrix& frame);

// S^{-1} Phi; exact for rational frames.
FrameMatrix canonical_dual(const FrameMatrix& frame);

struct DualityCheck {
  bool is_dual;
  double residual;  // ||Psi Phi^* - I||_F
};

constexpr double kDualityTolerance = 1e-10;

/// Exact test when both inputs are rational, Frobenius residual otherwise.
DualityCheck is_dual(const FrameMatrix& frame, const FrameMatrix& candidate,
                     double tol = kDualityTolerance);
DualityCheck is_dual(const Matrix& frame, const Matrix& candidate, double tol = kDualityTolerance);

/// Psi + E (I_m - Phi^* Psi). Every dual of Phi arises this way from any fixed
/// dual Psi.
FrameMatrix dual_from_perturbation(const FrameMatrix& frame, const FrameMatrix& dual,
                                   const Matrix& perturbation);

/// SVD factors of Phi plus the n x (m-n) block of free entries. The dual is
/// U [diag(1/sigma) | free_block] V^*.
struct DualParametrization {
  SvdFactors svd;
  Matrix free_block;
};

// Zero free block, i.e. the canonical dual.
DualParametrization parametrize(const FrameMatrix& frame);
FrameMatrix realize_dual(const DualParametrization& p);

// The (n-1) x m matrix with row `row` (0-based) deleted.
Matrix row_delete(const FrameMatrix& frame, Index row);

}  // namespace framedual
