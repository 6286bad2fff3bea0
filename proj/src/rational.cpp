#include "framedual/rational.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "framedual/error.hpp"

namespace framedual {

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) {
    out << '/' << denominator(q);
  }
  return out.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational exact_rational(double x) {
  if (!std::isfinite(x)) {
    throw FrameError(ErrorCode::InvalidArgument, "cannot convert a non-finite value to a rational");
  }
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // 53 bits of mantissa are an exact integer after scaling.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result(scaled);
  boost::multiprecision::cpp_int power = 1;
  power <<= std::abs(exponent);
  if (exponent >= 0) {
    result *= Rational(power);
  } else {
    result /= Rational(power);
  }
  return result;
}

RationalMatrix::RationalMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<Index>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != cols_) {
      throw FrameError(ErrorCode::ShapeMismatch, "ragged rational matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(Index n) {
  RationalMatrix id(n, n);
  for (Index i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

RationalMatrix RationalMatrix::adjoint() const {
  RationalMatrix t(cols_, rows_);
  for (Index r = 0; r < rows_; ++r)
    for (Index c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::select_columns(std::span<const Index> columns) const {
  RationalMatrix out(rows_, static_cast<Index>(columns.size()));
  for (Index r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < columns.size(); ++k) out(r, static_cast<Index>(k)) = (*this)(r, columns[k]);
  return out;
}

RationalMatrix RationalMatrix::remove_row(Index row) const {
  RationalMatrix out(rows_ - 1, cols_);
  for (Index r = 0, dst = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (Index c = 0; c < cols_; ++c) out(dst, c) = (*this)(r, c);
    ++dst;
  }
  return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw FrameError(ErrorCode::ShapeMismatch, "rational matrix sum shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw FrameError(ErrorCode::ShapeMismatch, "rational matrix difference shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

bool RationalMatrix::is_zero() const {
  for (const auto& q : data_)
    if (q != 0) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw FrameError(ErrorCode::ShapeMismatch, "rational matrix product shape mismatch");
  }
  RationalMatrix out(a.rows(), b.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index k = 0; k < a.cols(); ++k) {
      const Rational& lhs = a(r, k);
      if (lhs == 0) continue;
      for (Index c = 0; c < b.cols(); ++c) out(r, c) += lhs * b(k, c);
    }
  return out;
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }

RowEchelon row_echelon(RationalMatrix a) {
  RowEchelon result;
  Index pivot_row = 0;
  for (Index col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    Index found = -1;
    for (Index r = pivot_row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) {
      for (Index c = 0; c < a.cols(); ++c) std::swap(a(found, c), a(pivot_row, c));
    }
    const Rational inv = 1 / a(pivot_row, col);
    for (Index c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (Index c = col; c < a.cols(); ++c) a(r, c) -= factor * a(pivot_row, c);
    }
    result.pivots.push_back(col);
    ++pivot_row;
  }
  result.reduced = std::move(a);
  return result;
}

Index exact_rank(const RationalMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return static_cast<Index>(row_echelon(a).pivots.size());
}

RationalMatrix exact_nullspace(const RationalMatrix& a) {
  const Index n = a.cols();
  if (a.rows() == 0) return RationalMatrix::identity(n);
  const RowEchelon echelon = row_echelon(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : echelon.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  RationalMatrix basis(n, n - static_cast<Index>(echelon.pivots.size()));
  Index out_col = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out_col) = 1;
    for (std::size_t k = 0; k < echelon.pivots.size(); ++k) {
      basis(echelon.pivots[k], out_col) = -echelon.reduced(static_cast<Index>(k), free);
    }
    ++out_col;
  }
  return basis;
}

std::optional<std::vector<Rational>> exact_solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (static_cast<Index>(b.size()) != a.rows()) {
    throw FrameError(ErrorCode::ShapeMismatch, "right-hand side length does not match row count");
  }
  RationalMatrix augmented(a.rows(), a.cols() + 1);
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[static_cast<std::size_t>(r)];
  }
  const RowEchelon echelon = row_echelon(std::move(augmented));
  if (!echelon.pivots.empty() && echelon.pivots.back() == a.cols()) return std::nullopt;

  std::vector<Rational> x(static_cast<std::size_t>(a.cols()), Rational(0));
  for (std::size_t k = 0; k < echelon.pivots.size(); ++k) {
    x[static_cast<std::size_t>(echelon.pivots[k])] = echelon.reduced(static_cast<Index>(k), a.cols());
  }
  return x;
}

RationalMatrix exact_inverse(const RationalMatrix& a) {
  const Index n = a.rows();
  if (a.cols() != n) throw FrameError(ErrorCode::SingularSubset, "matrix is not square");
  RationalMatrix augmented(n, 2 * n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n + r) = 1;
  }
  const RowEchelon echelon = row_echelon(std::move(augmented));
  if (static_cast<Index>(echelon.pivots.size()) < n || (n > 0 && echelon.pivots[static_cast<std::size_t>(n - 1)] >= n)) {
    throw FrameError(ErrorCode::SingularSubset, "matrix is singular");
  }
  RationalMatrix inv(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) inv(r, c) = echelon.reduced(r, n + c);
  return inv;
}

}  // namespace framedual
