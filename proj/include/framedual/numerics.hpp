#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "framedual/error.hpp"
#include "framedual/rational.hpp"

namespace framedual {

enum class Field { Rational, Real, Complex };

std::string_view to_string(Field field);

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// A single entry of a Matrix, tagged by field.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational q) : value_(std::move(q)) {}
  Scalar(double x) : value_(x) {}
  Scalar(Complex z) : value_(z) {}

  Field field() const { return static_cast<Field>(value_.index()); }
  bool is_zero() const;
  Complex to_complex() const;
  std::string to_string() const;

  const std::variant<Rational, double, Complex>& value() const { return value_; }

 private:
  std::variant<Rational, double, Complex> value_;
};

/// Dense matrix over Q, R or C. All entries share the field tag; mixed
/// arithmetic promotes Rational -> Real -> Complex.
class Matrix {
 public:
  using Storage = std::variant<RationalMatrix, RealMatrix, ComplexMatrix>;

  Matrix() : data_(RationalMatrix()) {}
  Matrix(RationalMatrix m) : data_(std::move(m)) {}
  Matrix(RealMatrix m) : data_(std::move(m)) {}
  Matrix(ComplexMatrix m) : data_(std::move(m)) {}

  static Matrix zero(Index rows, Index cols, Field field);
  static Matrix identity(Index n, Field field);

  Field field() const { return static_cast<Field>(data_.index()); }
  bool is_exact() const { return field() == Field::Rational; }
  Index rows() const;
  Index cols() const;
  bool empty() const { return rows() == 0 || cols() == 0; }

  const Storage& storage() const { return data_; }
  const RationalMatrix& rational() const;
  const RealMatrix& real() const;
  const ComplexMatrix& complex() const;

  // Rational entries are rounded; Complex input throws FieldMismatch.
  RealMatrix to_real() const;
  ComplexMatrix to_complex() const;
  // Rational becomes Real; floating matrices are returned unchanged.
  Matrix to_floating() const;
  Matrix converted(Field field) const;

  Scalar at(Index r, Index c) const;
  Matrix adjoint() const;
  Matrix select_columns(std::span<const Index> columns) const;
  Matrix remove_row(Index row) const;

  // Entries with modulus > tol (exact zero test on Rational when tol == 0).
  Index count_nonzeros(double tol = 0.0) const;
  double frobenius_norm() const;

 private:
  Storage data_;
};

Field promote(Field a, Field b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
bool exactly_equal(const Matrix& a, const Matrix& b);

/// Rank threshold. Without an absolute value the threshold is
/// scale * max(rows, cols) * eps * sigma_max.
struct RankTolerance {
  std::optional<double> absolute;
  double scale = 1.0;

  double threshold(double sigma_max, Index rows, Index cols) const;
  RankTolerance scaled(double factor) const;
};

struct SvdFactors {
  Matrix u;
  std::vector<double> singular_values;
  Matrix v;
};

SvdFactors svd(const Matrix& a);
std::vector<double> singular_values(const Matrix& a);

Index rank_tol(const Matrix& a, const RankTolerance& tol = {});
Matrix nullspace_basis(const Matrix& a, const RankTolerance& tol = {});

// Throws FieldMismatch unless a is Rational.
std::optional<std::vector<Rational>> solve_exact(const Matrix& a, std::span<const Rational> b);

}  // namespace framedual
