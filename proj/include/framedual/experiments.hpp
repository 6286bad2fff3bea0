#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "framedual/sparsity.hpp"

namespace framedual {

/// Generalized Vandermonde frame: entry (i, j) = xs[j] ^ ys[i], with m column
/// nodes xs (distinct, positive) and n row exponents ys (distinct, >= 0).
FrameMatrix vandermonde_frame(std::span<const double> xs, std::span<const double> ys);
/// Exact variant with integer exponents.
FrameMatrix vandermonde_frame(std::span<const Rational> xs, std::span<const Index> ys);

struct GeneratedFrame {
  FrameMatrix frame;
  std::vector<std::string> warnings;
};

/// Rows 0..n-1 of the m x m DFT, scaled by m^{-1/2}; a tight frame with
/// Phi Phi^* = I.
GeneratedFrame partial_dft_frame(Index n, Index m);

/// All n^2 time-frequency shifts of the window; column k*n + l is the window
/// translated by k and modulated by l.
FrameMatrix gabor_frame(std::span<const Complex> window);

enum class Distribution { GaussianReal, GaussianComplex };

std::string_view to_string(Distribution d);

/// Standard normal entries; complex entries get independent real and
/// imaginary parts.
Matrix gaussian_matrix(Index n, Index m, Distribution dist, std::mt19937_64& rng);

/// Trial t draws from mt19937_64 seeded with seed_seq{seed low, seed high, t}.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

struct TrialReport {
  Index n = 0;
  Index m = 0;
  Index trials = 0;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::GaussianReal;
  Index count_in_p = 0;
  Index count_sparsity_n2 = 0;
  std::vector<std::string> failures;  // matrix files of trials outside P
  std::vector<Index> failed_trials;
  // Failed trials whose verdict changes under 10x tighter or looser thresholds.
  std::vector<Index> boundary;
  bool tolerance_dependent = true;
};

constexpr Index kTrialMaxRows = 4;
constexpr Index kTrialMaxCols = 8;

TrialReport genericity_trial(Index n, Index m, Index trials, std::uint64_t seed,
                             Distribution dist = Distribution::GaussianReal, const SearchOptions& options = {});

/// Picks the generalized Vandermonde frame with xs = 1..m and ys = 1..n.
struct AutoVandermonde {};

struct NudgeResult {
  Rational t;
  FrameMatrix frame;
};

/// Default schedule 10^{-k}, k = 1..12.
std::vector<Rational> default_nudge_schedule();

/// Smallest |t| from the schedule with t Phi1 + (1 - t) Phi0 in P; t = 0 when
/// Phi0 is already in P. Exact when both frames are rational.
NudgeResult nudge_to_generic(const FrameMatrix& phi0, const std::variant<FrameMatrix, AutoVandermonde>& phi1,
                             std::vector<Rational> schedule = default_nudge_schedule(),
                             const SearchOptions& options = {});

struct SurfacePoint {
  double s1;
  double s2;
  double lambda1;
  double lambda2;
};

struct Surface {
  double sigma1 = 0;
  double sigma2 = 0;
  // lambda1 == lambda2 at (+-tight_s1, 0).
  double tight_s1 = 0;
  std::vector<double> axis;
  std::vector<SurfacePoint> points;  // s1 major, s2 minor
};

/// Dual frame operator eigenvalues of a 2 x 3 frame over the grid
/// {lo + k step}^2 up to hi.
Surface surface_2x3(const FrameMatrix& frame, double lo, double hi, double step);

}  // namespace framedual
