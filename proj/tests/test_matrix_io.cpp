#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "framedual/matrix_io.hpp"
#include "helpers.hpp"

using namespace framedual;

namespace {

ErrorCode parse_code(std::string_view text) {
  try {
    parse_matrix(text);
  } catch (const FrameError& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(ParseRational, DecimalsAreExact) {
  EXPECT_EQ(parse_rational("1.25"), Rational(5) / Rational(4));
  EXPECT_EQ(parse_rational("-0.1"), Rational(-1) / Rational(10));
  EXPECT_EQ(parse_rational("0.3333333333"), Rational(3333333333LL) / Rational(10000000000LL));
  EXPECT_EQ(parse_rational("007"), Rational(7));
  EXPECT_EQ(parse_rational("2e3"), Rational(2000));
  EXPECT_EQ(parse_rational("1.5E-2"), Rational(3) / Rational(200));
  EXPECT_THROW(parse_rational("3/-4"), FrameError);
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3) / Rational(4));
  EXPECT_THROW(parse_rational("1/0"), FrameError);
  EXPECT_THROW(parse_rational("abc"), FrameError);
}

TEST(ParseMatrix, FieldInference) {
  EXPECT_EQ(parse_matrix("1,-1,0\n1,2,-1\n").field(), Field::Rational);
  EXPECT_EQ(parse_matrix("1/2,3\n").field(), Field::Rational);
  EXPECT_EQ(parse_matrix("0.5,3\n").field(), Field::Real);
  EXPECT_EQ(parse_matrix("0.5,3\n", true).field(), Field::Rational);
  EXPECT_EQ(parse_matrix("1+2i,3\n").field(), Field::Complex);
}

TEST(ParseMatrix, HeaderControlsField) {
  EXPECT_EQ(parse_matrix("# field=real\n1,2\n").field(), Field::Real);
  EXPECT_EQ(parse_matrix("# field=complex\n1,2\n").field(), Field::Complex);
  const Matrix promoted = parse_matrix("# field=real\n0.5,1/3\n");
  ASSERT_EQ(promoted.field(), Field::Rational);
  EXPECT_EQ(promoted.rational()(0, 0), Rational(1) / Rational(2));
  EXPECT_EQ(parse_code("# field=real\n1+i,2\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("# field=quaternion\n1\n"), ErrorCode::ParseError);
}

TEST(ParseMatrix, ComplexGrammar) {
  const Matrix a = parse_matrix("1-2.5i, i, -i, 3i, 2+i, 1e-3+2e-2i, 1/2-1/4i\n");
  const ComplexMatrix c = a.complex();
  EXPECT_EQ(c(0, 0), Complex(1, -2.5));
  EXPECT_EQ(c(0, 1), Complex(0, 1));
  EXPECT_EQ(c(0, 2), Complex(0, -1));
  EXPECT_EQ(c(0, 3), Complex(0, 3));
  EXPECT_EQ(c(0, 4), Complex(2, 1));
  EXPECT_EQ(c(0, 5), Complex(1e-3, 2e-2));
  EXPECT_EQ(c(0, 6), Complex(0.5, -0.25));
}

TEST(ParseMatrix, CommentsBlankLinesAndErrors) {
  const Matrix a = parse_matrix("# a comment\n\n1, 2\n# another\n3, 4\n");
  EXPECT_EQ(a.rows(), 2);
  EXPECT_EQ(parse_code("1,2\n3\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(""), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("1,,2\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("1,x\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("1,inf\n"), ErrorCode::ParseError);
  try {
    parse_matrix("1,2\n3,zz\n");
  } catch (const FrameError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Format, EntriesAndHeader) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_entry(Scalar(Rational(-3) / Rational(9))), "-1/3");
  EXPECT_EQ(format_entry(Scalar(Complex(1, -2))), "1-2i");
  EXPECT_EQ(format_entry(Scalar(Complex(0, 0.5))), "0+0.5i");
  EXPECT_EQ(format_matrix(Matrix(RationalMatrix{{1, 2}})), "# field=rational\n1,2\n");
}

TEST(RoundTrip, BitIdenticalOrWithinTolerance) {
  std::mt19937 rng(1);
  const RealMatrix r = testing_helpers::gaussian(rng, 3, 4) * 1e3;
  EXPECT_EQ(parse_matrix(format_matrix(Matrix(r))).real(), r);
  const ComplexMatrix c = testing_helpers::gaussian_complex(rng, 2, 3) * 1e-4;
  EXPECT_EQ(parse_matrix(format_matrix(Matrix(c))).complex(), c);
  const Matrix q(RationalMatrix{{1, -2}, {3, 4}});
  RationalMatrix frac = q.rational();
  frac(0, 1) /= Rational(7);
  EXPECT_EQ(parse_matrix(format_matrix(Matrix(frac))).rational(), frac);
}

TEST(Files, AtomicWriteAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "framedual_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "m.csv";
  const Matrix a(RationalMatrix{{1, 2}, {3, 4}});
  write_matrix_file(path, a);
  EXPECT_EQ(read_matrix_file(path).rational(), a.rational());
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    EXPECT_EQ(entry.path().filename(), "m.csv");
  }
  std::filesystem::remove_all(dir);
  EXPECT_THROW(read_matrix_file(dir / "missing.csv"), FrameError);
}
