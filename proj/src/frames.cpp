#include "framedual/frames.hpp"

#include <cmath>

namespace framedual {

FrameMatrix::FrameMatrix(Matrix mat, const RankTolerance& tol) : mat_(std::move(mat)) {
  if (mat_.rows() == 0 || mat_.cols() < mat_.rows()) {
    throw FrameError(ErrorCode::RankDeficient,
                     "not a frame: need n >= 1 rows and at least as many columns as rows");
  }
  if (rank_tol(mat_, tol) < mat_.rows()) {
    throw FrameError(ErrorCode::RankDeficient, "not a frame: the matrix does not have full row rank");
  }
}

FrameBounds frame_bounds(const FrameMatrix& frame) {
  const std::vector<double> sigma = singular_values(frame.matrix());
  return {sigma.back() * sigma.back(), sigma.front() * sigma.front()};
}

Matrix frame_operator(const FrameMatrix& frame) { return frame.matrix() * frame.matrix().adjoint(); }

FrameMatrix canonical_dual(const FrameMatrix& frame) {
  const Matrix& phi = frame.matrix();
  switch (phi.field()) {
    case Field::Rational: {
      const RationalMatrix& q = phi.rational();
      return FrameMatrix(exact_inverse(q * q.adjoint()) * q);
    }
    case Field::Real: {
      const RealMatrix& a = phi.real();
      return FrameMatrix(RealMatrix((a * a.adjoint()).llt().solve(a)));
    }
    case Field::Complex: {
      const ComplexMatrix& a = phi.complex();
      return FrameMatrix(ComplexMatrix((a * a.adjoint()).llt().solve(a)));
    }
  }
  throw FrameError(ErrorCode::FieldMismatch, "unknown field");
}

DualityCheck is_dual(const Matrix& frame, const Matrix& candidate, double tol) {
  if (frame.rows() != candidate.rows() || frame.cols() != candidate.cols()) {
    throw FrameError(ErrorCode::ShapeMismatch, "frame and candidate dual have different shapes");
  }
  const Matrix gram = candidate * frame.adjoint();
  const Matrix residual = gram - Matrix::identity(frame.rows(), gram.field());
  if (residual.is_exact()) {
    const bool exact = residual.rational().is_zero();
    return {exact, residual.frobenius_norm()};
  }
  const double norm = residual.frobenius_norm();
  return {norm <= tol, norm};
}

DualityCheck is_dual(const FrameMatrix& frame, const FrameMatrix& candidate, double tol) {
  return is_dual(frame.matrix(), candidate.matrix(), tol);
}

FrameMatrix dual_from_perturbation(const FrameMatrix& frame, const FrameMatrix& dual,
                                   const Matrix& perturbation) {
  const Matrix& phi = frame.matrix();
  const Matrix& psi = dual.matrix();
  if (psi.rows() != phi.rows() || psi.cols() != phi.cols() || perturbation.rows() != phi.rows() ||
      perturbation.cols() != phi.cols()) {
    throw FrameError(ErrorCode::ShapeMismatch, "perturbation must have the frame's shape");
  }
  const Field field = promote(promote(phi.field(), psi.field()), perturbation.field());
  const Matrix projector = Matrix::identity(phi.cols(), field) - phi.adjoint() * psi;
  return FrameMatrix(psi + perturbation * projector);
}

DualParametrization parametrize(const FrameMatrix& frame) {
  DualParametrization p{svd(frame.matrix()), Matrix()};
  const Field field = frame.field() == Field::Complex ? Field::Complex : Field::Real;
  p.free_block = Matrix::zero(frame.n(), frame.redundancy_gap(), field);
  return p;
}

FrameMatrix realize_dual(const DualParametrization& p) {
  const Index n = p.svd.u.rows();
  const Index m = p.svd.v.rows();
  if (p.free_block.rows() != n || p.free_block.cols() != m - n) {
    throw FrameError(ErrorCode::ShapeMismatch, "free block must be n x (m - n)");
  }
  const Field field = promote(promote(p.svd.u.field(), p.svd.v.field()), p.free_block.field()) ==
                              Field::Complex
                          ? Field::Complex
                          : Field::Real;
  Matrix middle;
  if (field == Field::Complex) {
    ComplexMatrix mid = ComplexMatrix::Zero(n, m);
    for (Index i = 0; i < n; ++i) mid(i, i) = 1.0 / p.svd.singular_values[static_cast<std::size_t>(i)];
    mid.rightCols(m - n) = p.free_block.to_complex();
    middle = Matrix(std::move(mid));
  } else {
    RealMatrix mid = RealMatrix::Zero(n, m);
    for (Index i = 0; i < n; ++i) mid(i, i) = 1.0 / p.svd.singular_values[static_cast<std::size_t>(i)];
    mid.rightCols(m - n) = p.free_block.to_real();
    middle = Matrix(std::move(mid));
  }
  return FrameMatrix(p.svd.u * middle * p.svd.v.adjoint());
}

Matrix row_delete(const FrameMatrix& frame, Index row) {
  if (row < 0 || row >= frame.n()) {
    throw FrameError(ErrorCode::IndexOutOfRange, "row index out of range");
  }
  return frame.matrix().remove_row(row);
}

}  // namespace framedual
