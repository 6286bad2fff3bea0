#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace framedual {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using Index = std::ptrdiff_t;

std::string to_string(const Rational& q);
double to_double(const Rational& q);

// Exact conversion of a finite double (every double is a dyadic rational).
Rational exact_rational(double x);

// Dense row-major matrix over Q. Only what the exact path needs: products,
// adjoints, column selection and elimination.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(Index rows, Index cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(Index n);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }

  Rational& operator()(Index r, Index c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& operator()(Index r, Index c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }

  // Conjugate transpose, which over Q is the transpose.
  RationalMatrix adjoint() const;
  RationalMatrix select_columns(std::span<const Index> columns) const;
  RationalMatrix remove_row(Index row) const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);

  bool is_zero() const;
  bool operator==(const RationalMatrix& other) const = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);

// Reduced row echelon form computed exactly; pivots lists the pivot column of
// each nonzero row.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<Index> pivots;
};

RowEchelon row_echelon(RationalMatrix a);
Index exact_rank(const RationalMatrix& a);

// Columns span ker(a); one basis vector per free column, with a 1 in that
// free position.
RationalMatrix exact_nullspace(const RationalMatrix& a);

// Solves a x = b; nullopt when the system is inconsistent. Free variables are
// set to zero.
std::optional<std::vector<Rational>> exact_solve(const RationalMatrix& a,
                                                 std::span<const Rational> b);

// Throws SingularSubset when a is not square invertible.
RationalMatrix exact_inverse(const RationalMatrix& a);

}  // namespace framedual
