#include "framedual/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "floating.hpp"

namespace framedual {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::AmbiguousSupport: return "AmbiguousSupport";
    case ErrorCode::SingularSubset: return "SingularSubset";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::NoTightDual: return "NoTightDual";
    case ErrorCode::BoundInfeasible: return "BoundInfeasible";
    case ErrorCode::TooManyPicks: return "TooManyPicks";
    case ErrorCode::BelowCanonical: return "BelowCanonical";
    case ErrorCode::BadTarget: return "BadTarget";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroWindow: return "ZeroWindow";
    case ErrorCode::ScheduleExhausted: return "ScheduleExhausted";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(Field field) {
  switch (field) {
    case Field::Rational: return "rational";
    case Field::Real: return "real";
    case Field::Complex: return "complex";
  }
  return "unknown";
}

// --- Scalar ---------------------------------------------------------------

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v == std::decay_t<decltype(v)>(0); }, value_);
}

Complex Scalar::to_complex() const {
  switch (field()) {
    case Field::Rational: return {to_double(std::get<Rational>(value_)), 0.0};
    case Field::Real: return {std::get<double>(value_), 0.0};
    case Field::Complex: return std::get<Complex>(value_);
  }
  return {};
}

std::string Scalar::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (field()) {
    case Field::Rational: return framedual::to_string(std::get<Rational>(value_));
    case Field::Real: out << std::get<double>(value_); break;
    case Field::Complex: {
      const Complex z = std::get<Complex>(value_);
      out << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << 'i';
      break;
    }
  }
  return out.str();
}

// --- Matrix ---------------------------------------------------------------

Matrix Matrix::zero(Index rows, Index cols, Field field) {
  switch (field) {
    case Field::Rational: return RationalMatrix(rows, cols);
    case Field::Real: return RealMatrix(RealMatrix::Zero(rows, cols));
    case Field::Complex: return ComplexMatrix(ComplexMatrix::Zero(rows, cols));
  }
  return {};
}

Matrix Matrix::identity(Index n, Field field) {
  switch (field) {
    case Field::Rational: return RationalMatrix::identity(n);
    case Field::Real: return RealMatrix(RealMatrix::Identity(n, n));
    case Field::Complex: return ComplexMatrix(ComplexMatrix::Identity(n, n));
  }
  return {};
}

Index Matrix::rows() const {
  return std::visit([](const auto& m) -> Index { return m.rows(); }, data_);
}

Index Matrix::cols() const {
  return std::visit([](const auto& m) -> Index { return m.cols(); }, data_);
}

const RationalMatrix& Matrix::rational() const {
  if (field() != Field::Rational) throw FrameError(ErrorCode::FieldMismatch, "matrix is not rational");
  return std::get<RationalMatrix>(data_);
}

const RealMatrix& Matrix::real() const {
  if (field() != Field::Real) throw FrameError(ErrorCode::FieldMismatch, "matrix is not real");
  return std::get<RealMatrix>(data_);
}

const ComplexMatrix& Matrix::complex() const {
  if (field() != Field::Complex) throw FrameError(ErrorCode::FieldMismatch, "matrix is not complex");
  return std::get<ComplexMatrix>(data_);
}

RealMatrix Matrix::to_real() const {
  switch (field()) {
    case Field::Rational: {
      const auto& q = rational();
      RealMatrix out(q.rows(), q.cols());
      for (Index r = 0; r < q.rows(); ++r)
        for (Index c = 0; c < q.cols(); ++c) out(r, c) = to_double(q(r, c));
      return out;
    }
    case Field::Real: return real();
    case Field::Complex: break;
  }
  throw FrameError(ErrorCode::FieldMismatch, "complex matrix cannot be converted to real");
}

ComplexMatrix Matrix::to_complex() const {
  if (field() == Field::Complex) return complex();
  return to_real().cast<Complex>();
}

Matrix Matrix::to_floating() const {
  if (field() == Field::Rational) return Matrix(to_real());
  return *this;
}

Matrix Matrix::converted(Field target) const {
  if (target == field()) return *this;
  switch (target) {
    case Field::Real: return Matrix(to_real());
    case Field::Complex: return Matrix(to_complex());
    case Field::Rational: {
      const RealMatrix values = to_real();
      RationalMatrix out(values.rows(), values.cols());
      for (Index r = 0; r < values.rows(); ++r)
        for (Index c = 0; c < values.cols(); ++c) out(r, c) = exact_rational(values(r, c));
      return out;
    }
  }
  return *this;
}

Scalar Matrix::at(Index r, Index c) const {
  switch (field()) {
    case Field::Rational: return rational()(r, c);
    case Field::Real: return real()(r, c);
    case Field::Complex: return complex()(r, c);
  }
  return {};
}

Matrix Matrix::adjoint() const {
  switch (field()) {
    case Field::Rational: return rational().adjoint();
    case Field::Real: return RealMatrix(real().adjoint());
    case Field::Complex: return ComplexMatrix(complex().adjoint());
  }
  return {};
}

Matrix Matrix::select_columns(std::span<const Index> columns) const {
  for (Index c : columns) {
    if (c < 0 || c >= cols()) throw FrameError(ErrorCode::IndexOutOfRange, "column index out of range");
  }
  switch (field()) {
    case Field::Rational: return rational().select_columns(columns);
    case Field::Real: return RealMatrix(detail::select_columns<double>(real(), columns));
    case Field::Complex: return ComplexMatrix(detail::select_columns<Complex>(complex(), columns));
  }
  return {};
}

Matrix Matrix::remove_row(Index row) const {
  if (row < 0 || row >= rows()) throw FrameError(ErrorCode::IndexOutOfRange, "row index out of range");
  switch (field()) {
    case Field::Rational: return rational().remove_row(row);
    case Field::Real: return RealMatrix(detail::remove_row<double>(real(), row));
    case Field::Complex: return ComplexMatrix(detail::remove_row<Complex>(complex(), row));
  }
  return {};
}

Index Matrix::count_nonzeros(double tol) const {
  Index count = 0;
  for (Index r = 0; r < rows(); ++r)
    for (Index c = 0; c < cols(); ++c) {
      const Scalar s = at(r, c);
      if (s.field() == Field::Rational) {
        if (!s.is_zero()) ++count;
      } else if (std::abs(s.to_complex()) > tol) {
        ++count;
      }
    }
  return count;
}

double Matrix::frobenius_norm() const {
  if (field() == Field::Complex) return complex().norm();
  return to_real().norm();
}

Field promote(Field a, Field b) { return static_cast<Field>(std::max(static_cast<int>(a), static_cast<int>(b))); }

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok) throw FrameError(ErrorCode::ShapeMismatch, what);
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_shape(a.cols() == b.rows(), "matrix product shape mismatch");
  switch (promote(a.field(), b.field())) {
    case Field::Rational: return a.rational() * b.rational();
    case Field::Real: return RealMatrix(a.to_real() * b.to_real());
    case Field::Complex: return ComplexMatrix(a.to_complex() * b.to_complex());
  }
  return {};
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
  switch (promote(a.field(), b.field())) {
    case Field::Rational: return a.rational() + b.rational();
    case Field::Real: return RealMatrix(a.to_real() + b.to_real());
    case Field::Complex: return ComplexMatrix(a.to_complex() + b.to_complex());
  }
  return {};
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
  switch (promote(a.field(), b.field())) {
    case Field::Rational: return a.rational() - b.rational();
    case Field::Real: return RealMatrix(a.to_real() - b.to_real());
    case Field::Complex: return ComplexMatrix(a.to_complex() - b.to_complex());
  }
  return {};
}

bool exactly_equal(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field() || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  switch (a.field()) {
    case Field::Rational: return a.rational() == b.rational();
    case Field::Real: return a.real() == b.real();
    case Field::Complex: return a.complex() == b.complex();
  }
  return false;
}

// --- tolerances -----------------------------------------------------------

double RankTolerance::threshold(double sigma_max, Index rows, Index cols) const {
  if (absolute) return *absolute * scale;
  return scale * static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon() * sigma_max;
}

RankTolerance RankTolerance::scaled(double factor) const {
  RankTolerance out = *this;
  out.scale *= factor;
  return out;
}

// --- decompositions -------------------------------------------------------

namespace {

template <class S>
SvdFactors svd_impl(const detail::Dense<S>& a) {
  Eigen::JacobiSVD<detail::Dense<S>> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) {
    throw FrameError(ErrorCode::NonConvergence, "Jacobi SVD did not converge");
  }
  SvdFactors out;
  out.u = Matrix(detail::Dense<S>(solver.matrixU()));
  out.v = Matrix(detail::Dense<S>(solver.matrixV()));
  const Eigen::VectorXd& sigma = solver.singularValues();
  out.singular_values.assign(sigma.data(), sigma.data() + sigma.size());
  return out;
}

}  // namespace

SvdFactors svd(const Matrix& a) {
  if (a.empty()) throw FrameError(ErrorCode::BadShape, "svd of an empty matrix");
  return detail::visit_floating(a, [](const auto& m) { return svd_impl(m); });
}

std::vector<double> singular_values(const Matrix& a) {
  const Eigen::VectorXd sigma = detail::visit_floating(a, [](const auto& m) {
    using S = typename std::decay_t<decltype(m)>::Scalar;
    return detail::singular_values_of<S>(m);
  });
  return {sigma.data(), sigma.data() + sigma.size()};
}

Index rank_tol(const Matrix& a, const RankTolerance& tol) {
  if (a.is_exact()) return exact_rank(a.rational());
  return detail::visit_floating(a, [&](const auto& m) {
    using S = typename std::decay_t<decltype(m)>::Scalar;
    return detail::floating_rank<S>(m, tol);
  });
}

Matrix nullspace_basis(const Matrix& a, const RankTolerance& tol) {
  if (a.is_exact()) return exact_nullspace(a.rational());
  return detail::visit_floating(a, [&](const auto& m) {
    using S = typename std::decay_t<decltype(m)>::Scalar;
    return Matrix(detail::floating_nullspace<S>(m, tol));
  });
}

std::optional<std::vector<Rational>> solve_exact(const Matrix& a, std::span<const Rational> b) {
  if (!a.is_exact()) throw FrameError(ErrorCode::FieldMismatch, "solve_exact requires a rational matrix");
  return exact_solve(a.rational(), b);
}

}  // namespace framedual
