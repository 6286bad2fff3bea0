#include <gtest/gtest.h>

#include <random>

#include "framedual/numerics.hpp"
#include "helpers.hpp"

using namespace framedual;
using testing_helpers::to_matrix;

TEST(Rational, FormatsIntegersAndFractions) {
  EXPECT_EQ(to_string(Rational(3)), "3");
  EXPECT_EQ(to_string(Rational(-2) / Rational(6)), "-1/3");
  EXPECT_EQ(exact_rational(0.375), Rational(3) / Rational(8));
  EXPECT_EQ(exact_rational(-5.0), Rational(-5));
}

TEST(Rational, RowEchelonAndNullspace) {
  const RationalMatrix a{{1, -1, 0}, {1, 2, -1}};
  EXPECT_EQ(exact_rank(a), 2);
  const RationalMatrix k = exact_nullspace(a);
  ASSERT_EQ(k.cols(), 1);
  EXPECT_TRUE((a * k).is_zero());
  // Hand-computed kernel direction (1, 1, 3).
  EXPECT_EQ(k(1, 0), k(0, 0));
  EXPECT_EQ(k(2, 0), Rational(3) * k(0, 0));
}

TEST(Rational, SolveAndInverse) {
  const RationalMatrix a{{2, 1}, {1, 1}};
  const RationalMatrix inv = exact_inverse(a);
  EXPECT_EQ(a * inv, RationalMatrix::identity(2));
  const std::vector<Rational> b{Rational(3), Rational(2)};
  const auto x = exact_solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(1));
  EXPECT_EQ((*x)[1], Rational(1));

  const RationalMatrix singular{{1, 2}, {2, 4}};
  EXPECT_THROW(exact_inverse(singular), FrameError);
  const std::vector<Rational> inconsistent{Rational(1), Rational(0)};
  EXPECT_FALSE(exact_solve(singular, inconsistent));
}

TEST(Matrix, FieldPromotionInProducts) {
  const Matrix q(RationalMatrix{{1, 2}});
  const Matrix r(RealMatrix(RealMatrix::Ones(2, 1)));
  const Matrix c(ComplexMatrix(ComplexMatrix::Constant(1, 1, Complex(0, 1))));
  EXPECT_EQ((q * Matrix(RationalMatrix{{1}, {1}})).field(), Field::Rational);
  EXPECT_EQ((q * r).field(), Field::Real);
  EXPECT_DOUBLE_EQ((q * r).real()(0, 0), 3.0);
  EXPECT_EQ((c * q).field(), Field::Complex);
  EXPECT_THROW(q * q, FrameError);
  EXPECT_THROW(static_cast<void>(q.real()), FrameError);
}

TEST(Matrix, AdjointConjugates) {
  ComplexMatrix a(1, 2);
  a << Complex(1, 2), Complex(3, -1);
  const Matrix h = Matrix(a).adjoint();
  EXPECT_EQ(h.rows(), 2);
  EXPECT_EQ(h.complex()(0, 0), Complex(1, -2));
  EXPECT_EQ(h.complex()(1, 0), Complex(3, 1));
}

TEST(Matrix, SelectAndRemove) {
  const Matrix a(RationalMatrix{{1, 2, 3}, {4, 5, 6}});
  const std::vector<Index> cols{2, 0};
  const Matrix s = a.select_columns(cols);
  EXPECT_EQ(s.at(1, 0).to_string(), "6");
  EXPECT_EQ(s.at(0, 1).to_string(), "1");
  const Matrix r = a.remove_row(0);
  EXPECT_EQ(r.rows(), 1);
  EXPECT_EQ(r.at(0, 2).to_string(), "6");
  EXPECT_THROW(a.remove_row(2), FrameError);
  const std::vector<Index> bad{3};
  EXPECT_THROW(a.select_columns(bad), FrameError);
}

TEST(Matrix, CountNonzeros) {
  const Matrix a(RationalMatrix{{0, 1}, {2, 0}});
  EXPECT_EQ(a.count_nonzeros(), 2);
  RealMatrix b(1, 3);
  b << 1e-14, 1.0, 0.0;
  EXPECT_EQ(Matrix(b).count_nonzeros(1e-12), 1);
}

TEST(Svd, ReconstructsRealAndComplex) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const RealMatrix a = testing_helpers::gaussian(rng, 3, 5);
    const SvdFactors f = svd(Matrix(a));
    RealMatrix sigma = RealMatrix::Zero(3, 5);
    for (Index i = 0; i < 3; ++i) sigma(i, i) = f.singular_values[static_cast<std::size_t>(i)];
    EXPECT_LT((f.u.real() * sigma * f.v.real().adjoint() - a).norm(), 1e-12);
    EXPECT_TRUE(std::is_sorted(f.singular_values.rbegin(), f.singular_values.rend()));

    const ComplexMatrix c = testing_helpers::gaussian_complex(rng, 2, 4);
    const SvdFactors g = svd(Matrix(c));
    ComplexMatrix s2 = ComplexMatrix::Zero(2, 4);
    for (Index i = 0; i < 2; ++i) s2(i, i) = g.singular_values[static_cast<std::size_t>(i)];
    EXPECT_LT((g.u.complex() * s2 * g.v.complex().adjoint() - c).norm(), 1e-12);
  }
}

TEST(Svd, EmptyMatrixRejected) { EXPECT_THROW(svd(Matrix(RealMatrix(0, 3))), FrameError); }

// Exact rank against an independent elimination, and floating rank of the
// same integer matrices, on 200 random cases with forced dependencies.
TEST(Rank, RandomIntegerCrossCheck) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(dim(rng));
    const auto c = static_cast<std::size_t>(dim(rng));
    oracle::QMat a = oracle::random_integer_matrix(rng, r, c, -3, 3);
    if (trial % 3 == 0 && r > 1) a[r - 1] = a[0];  // duplicate row
    if (trial % 5 == 0 && c > 1)
      for (auto& row : a) row[c - 1] = row[0] * 2 - row[c > 2 ? 1 : 0];
    const auto expected = static_cast<Index>(oracle::rank(a));
    const Matrix m = to_matrix(a);
    EXPECT_EQ(rank_tol(m), expected) << "trial " << trial;
    EXPECT_EQ(rank_tol(Matrix(m.to_real())), expected) << "trial " << trial;
    const Matrix k = nullspace_basis(m);
    EXPECT_EQ(k.cols(), static_cast<Index>(c) - expected);
    if (k.cols() > 0) EXPECT_TRUE((m * k).rational().is_zero());
  }
}

TEST(Rank, ToleranceControlsNearDependence) {
  RealMatrix a(2, 2);
  a << 1, 1, 1, 1 + 1e-9;
  EXPECT_EQ(rank_tol(Matrix(a)), 2);
  RankTolerance loose;
  loose.absolute = 1e-6;
  EXPECT_EQ(rank_tol(Matrix(a), loose), 1);
  EXPECT_EQ(rank_tol(Matrix(a), RankTolerance{}.scaled(1e8)), 1);
}

TEST(Solve, ExactOnlyOnRational) {
  const Matrix a(RationalMatrix{{1, 1}, {0, 2}});
  const std::vector<Rational> b{Rational(1), Rational(1)};
  const auto x = solve_exact(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[1], Rational(1) / Rational(2));
  EXPECT_THROW(solve_exact(Matrix(a.to_real()), b), FrameError);
}

TEST(Errors, CodesHaveNames) {
  EXPECT_EQ(to_string(ErrorCode::NoTightDual), "NoTightDual");
  const FrameError e(ErrorCode::SizeLimit, "too big");
  EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
}
