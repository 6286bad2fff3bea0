#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "framedual/frames.hpp"

namespace framedual {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class TightCase {
  Redundant2n,    // m >= 2n: any dual singular value >= 1/sigma_n
  Exact2nMinus1,  // m = 2n - 1: only 1/sigma_n
  Constrained,    // m < 2n - 1: needs the smallest 2n - m singular values equal
  AlreadyTight,   // Phi is tight; its canonical dual is the tight dual
};

std::string_view to_string(TightCase c);

struct TightDualSpec {
  double sigma_psi = 0;  // common singular value of the dual
  TightCase tight_case = TightCase::Redundant2n;
  // Number of singular values strictly above the sigma_n cluster.
  Index p = 0;
};

/// Relative tolerance used to group singular values equal to sigma_n.
constexpr double kMultiplicityTolerance = 1e-8;

/// Decides whether a tight dual with singular value sigma_psi exists
/// (nullopt: the smallest possible, 1/sigma_n). Throws NoTightDual or
/// BoundInfeasible.
TightDualSpec classify_tight_dual(const FrameMatrix& frame, std::optional<double> sigma_psi = std::nullopt);

struct ConstructedDual {
  FrameMatrix dual;
  Matrix free_block;                       // the s-block used in the SVD parametrization
  std::vector<double> expected_spectrum;  // non-increasing
};

struct TightDual {
  ConstructedDual result;
  TightDualSpec spec;
};

TightDual tight_dual(const FrameMatrix& frame, std::optional<double> sigma_psi = std::nullopt);

struct SpectrumPick {
  Index index;   // 0-based position in the non-increasing singular values of Phi
  double value;  // requested dual singular value, >= 1/sigma_index
};

/// Raises the picked canonical dual singular values 1/sigma_i to q_i using
/// orthogonal coordinate directions of the free block, assigned in pick order.
ConstructedDual prescribed_spectrum_dual(const FrameMatrix& frame, std::span<const SpectrumPick> picks);

struct InterlacingViolation {
  Index index;   // 0-based position in the target
  double bound;
  bool lower;    // true: below the lower bound
};

struct SpectrumTarget {
  std::vector<double> values;
  bool feasible = false;
  bool constructive = false;
  std::vector<InterlacingViolation> violated;
  // When constructive: picks that realize the target via prescribed_spectrum_dual.
  std::vector<SpectrumPick> picks;
};

/// Checks the interlacing inequalities
///   1/sigma_{n-i+1} <= t_i                        for every i,
///   t_i <= 1/sigma_{n-i+r+1}                      for i > r = m - n,
/// with relative slack rel_tol.
SpectrumTarget spectrum_feasible(const FrameMatrix& frame, std::span<const double> target,
                                 double rel_tol = 1e-9);

struct Interval {
  double lo;
  double hi;
};

struct DualBoundRange {
  Interval upper;  // admissible upper frame bounds B of a dual
  Interval lower;  // admissible lower frame bounds A of a dual
};

DualBoundRange dual_bound_range(const FrameMatrix& frame);

// Per-eigenvalue intervals of the dual frame operator spectra, largest first.
std::vector<Interval> lambda_region(const FrameMatrix& frame);

struct EigenPair {
  double larger;
  double smaller;
};

/// Eigenvalues of the dual frame operator of a 2 x 3 frame with singular
/// values (sigma1, sigma2) for free entries (s1, s2).
EigenPair dual_eigs_2x3(double sigma1, double sigma2, double s1, double s2);

}  // namespace framedual
