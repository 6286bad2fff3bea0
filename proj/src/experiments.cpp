#include "framedual/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "framedual/matrix_io.hpp"
#include "framedual/spectral.hpp"

namespace framedual {

namespace {

constexpr Index kGeneralPositionCheckCols = 12;

void check_general_position(const FrameMatrix& frame) {
  if (frame.m() > kGeneralPositionCheckCols) return;
  if (!projections_in_general_position(frame)) {
    throw FrameError(ErrorCode::InvalidArgument,
                     "nodes are too close: the Vandermonde frame is not numerically in general position");
  }
}

template <class T>
void require_distinct(std::span<const T> values, const char* what) {
  std::set<T> seen;
  for (const T& v : values) {
    if (!seen.insert(v).second) throw FrameError(ErrorCode::DuplicateNode, std::string("repeated ") + what);
  }
}

bool is_prime(Index m) {
  if (m < 2) return false;
  for (Index d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

Matrix blend(const Matrix& phi0, const Matrix& phi1, const Rational& t) {
  if (phi0.is_exact() && phi1.is_exact()) {
    const RationalMatrix& a = phi0.rational();
    const RationalMatrix& b = phi1.rational();
    RationalMatrix out(a.rows(), a.cols());
    const Rational keep = Rational(1) - t;
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j = 0; j < a.cols(); ++j) out(i, j) = t * b(i, j) + keep * a(i, j);
    return Matrix(std::move(out));
  }
  const double td = to_double(t);
  if (phi0.field() == Field::Complex || phi1.field() == Field::Complex) {
    return Matrix(ComplexMatrix(td * phi1.to_complex() + (1.0 - td) * phi0.to_complex()));
  }
  return Matrix(RealMatrix(td * phi1.to_real() + (1.0 - td) * phi0.to_real()));
}

bool in_p(const Matrix& phi, const SearchOptions& options, std::optional<FrameMatrix>& frame) {
  try {
    frame.emplace(phi, options.tolerance);
  } catch (const FrameError& e) {
    if (e.code() != ErrorCode::RankDeficient) throw;
    return false;
  }
  return projections_in_general_position(*frame, options);
}

}  // namespace

FrameMatrix vandermonde_frame(std::span<const double> xs, std::span<const double> ys) {
  for (double x : xs)
    if (!(x > 0) || !std::isfinite(x)) throw FrameError(ErrorCode::InvalidArgument, "Vandermonde nodes must be positive");
  for (double y : ys)
    if (!(y >= 0) || !std::isfinite(y)) throw FrameError(ErrorCode::InvalidArgument, "Vandermonde exponents must be >= 0");
  require_distinct(xs, "Vandermonde node");
  require_distinct(ys, "Vandermonde exponent");
  const auto n = static_cast<Index>(ys.size());
  const auto m = static_cast<Index>(xs.size());
  RealMatrix phi(n, m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) phi(i, j) = std::pow(xs[static_cast<std::size_t>(j)], ys[static_cast<std::size_t>(i)]);
  FrameMatrix frame(std::move(phi));
  check_general_position(frame);
  return frame;
}

FrameMatrix vandermonde_frame(std::span<const Rational> xs, std::span<const Index> ys) {
  for (const Rational& x : xs)
    if (x <= 0) throw FrameError(ErrorCode::InvalidArgument, "Vandermonde nodes must be positive");
  for (Index y : ys)
    if (y < 0) throw FrameError(ErrorCode::InvalidArgument, "Vandermonde exponents must be >= 0");
  require_distinct(xs, "Vandermonde node");
  require_distinct(ys, "Vandermonde exponent");
  const auto n = static_cast<Index>(ys.size());
  const auto m = static_cast<Index>(xs.size());
  RationalMatrix phi(n, m);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) {
      Rational p(1);
      for (Index k = 0; k < ys[static_cast<std::size_t>(i)]; ++k) p *= xs[static_cast<std::size_t>(j)];
      phi(i, j) = p;
    }
  }
  FrameMatrix frame(std::move(phi));
  check_general_position(frame);
  return frame;
}

GeneratedFrame partial_dft_frame(Index n, Index m) {
  if (n < 1 || n > m) throw FrameError(ErrorCode::InvalidArgument, "partial DFT needs 1 <= n <= m");
  GeneratedFrame out{FrameMatrix(Matrix::identity(1, Field::Real)), {}};
  if (!is_prime(m)) {
    out.warnings.push_back("m = " + std::to_string(m) +
                           " is not prime; minors of the partial DFT matrix may vanish");
  }
  ComplexMatrix phi(n, m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (Index k = 0; k < n; ++k) {
    for (Index j = 0; j < m; ++j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * j) % m) / static_cast<double>(m);
      phi(k, j) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  const double defect = (phi * phi.adjoint() - ComplexMatrix::Identity(n, n)).norm();
  if (defect > 1e-10) throw FrameError(ErrorCode::NonConvergence, "partial DFT rows are not orthonormal");
  out.frame = FrameMatrix(std::move(phi));
  return out;
}

FrameMatrix gabor_frame(std::span<const Complex> window) {
  const auto n = static_cast<Index>(window.size());
  if (n == 0 || std::all_of(window.begin(), window.end(), [](Complex z) { return z == Complex(0); })) {
    throw FrameError(ErrorCode::ZeroWindow, "Gabor window must be nonzero");
  }
  ComplexMatrix phi(n, n * n);
  for (Index k = 0; k < n; ++k) {
    for (Index l = 0; l < n; ++l) {
      for (Index t = 0; t < n; ++t) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((l * t) % n) / static_cast<double>(n);
        phi(t, k * n + l) = Complex(std::cos(angle), std::sin(angle)) * window[static_cast<std::size_t>((t - k + n) % n)];
      }
    }
  }
  return FrameMatrix(std::move(phi));
}

std::string_view to_string(Distribution d) {
  return d == Distribution::GaussianReal ? "gaussian-real" : "gaussian-complex";
}

Matrix gaussian_matrix(Index n, Index m, Distribution dist, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  if (dist == Distribution::GaussianReal) {
    RealMatrix a(n, m);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < m; ++j) a(i, j) = normal(rng);
    return Matrix(std::move(a));
  }
  ComplexMatrix a(n, m);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) {
      const double re = normal(rng);
      a(i, j) = Complex(re, normal(rng));
    }
  }
  return Matrix(std::move(a));
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

TrialReport genericity_trial(Index n, Index m, Index trials, std::uint64_t seed, Distribution dist,
                             const SearchOptions& options) {
  if (n < 1 || m < n || trials < 0) throw FrameError(ErrorCode::InvalidArgument, "need 1 <= n <= m and trials >= 0");
  if (n > kTrialMaxRows || m > kTrialMaxCols) {
    throw FrameError(ErrorCode::SizeLimit, "genericity trials are limited to n <= " + std::to_string(kTrialMaxRows) +
                                               " and m <= " + std::to_string(kTrialMaxCols));
  }
  TrialReport report;
  report.n = n;
  report.m = m;
  report.trials = trials;
  report.seed = seed;
  report.distribution = dist;

  for (Index t = 0; t < trials; ++t) {
    std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const Matrix phi = gaussian_matrix(n, m, dist, rng);
    std::optional<FrameMatrix> frame;
    const bool member = in_p(phi, options, frame);
    if (frame) {
      Index total = 0;
      for (Index j = 0; j < n; ++j) total += generalized_spark(*frame, j, options);
      if (total == n * n) ++report.count_sparsity_n2;
    }
    if (member) {
      ++report.count_in_p;
      continue;
    }
    report.failed_trials.push_back(t);
    report.failures.push_back(format_matrix(phi));
    for (double factor : {0.1, 10.0}) {
      SearchOptions other = options;
      other.tolerance = options.tolerance.scaled(factor);
      std::optional<FrameMatrix> unused;
      if (in_p(phi, other, unused)) {
        report.boundary.push_back(t);
        break;
      }
    }
  }
  return report;
}

std::vector<Rational> default_nudge_schedule() {
  std::vector<Rational> schedule;
  Rational t(1);
  for (int k = 1; k <= 12; ++k) {
    t /= 10;
    schedule.push_back(t);
  }
  return schedule;
}

NudgeResult nudge_to_generic(const FrameMatrix& phi0, const std::variant<FrameMatrix, AutoVandermonde>& phi1,
                             std::vector<Rational> schedule, const SearchOptions& options) {
  FrameMatrix target = std::holds_alternative<FrameMatrix>(phi1) ? std::get<FrameMatrix>(phi1) : [&] {
    std::vector<Rational> xs;
    std::vector<Index> ys;
    for (Index j = 1; j <= phi0.m(); ++j) xs.emplace_back(j);
    for (Index i = 1; i <= phi0.n(); ++i) ys.push_back(i);
    return vandermonde_frame(std::span<const Rational>(xs), std::span<const Index>(ys));
  }();
  if (target.n() != phi0.n() || target.m() != phi0.m()) {
    throw FrameError(ErrorCode::ShapeMismatch, "nudge target must have the same shape as the frame");
  }
  if (!projections_in_general_position(target, options)) {
    throw FrameError(ErrorCode::InvalidArgument, "nudge target is not in P");
  }
  if (projections_in_general_position(phi0, options)) return {Rational(0), phi0};

  std::stable_sort(schedule.begin(), schedule.end(), [](const Rational& a, const Rational& b) { return abs(a) < abs(b); });
  std::string last = "empty schedule";
  for (const Rational& t : schedule) {
    std::optional<FrameMatrix> frame;
    if (in_p(blend(phi0.matrix(), target.matrix(), t), options, frame)) return {t, std::move(*frame)};
    last = "t = " + to_string(t) + " is not in P";
  }
  throw FrameError(ErrorCode::ScheduleExhausted, "no scheduled t gives a frame in P; last: " + last);
}

Surface surface_2x3(const FrameMatrix& frame, double lo, double hi, double step) {
  if (frame.n() != 2 || frame.m() != 3) throw FrameError(ErrorCode::BadShape, "surface data needs a 2 x 3 frame");
  if (!(step > 0) || !(lo <= hi)) throw FrameError(ErrorCode::InvalidArgument, "need lo <= hi and step > 0");
  const std::vector<double> sigma = singular_values(frame.matrix());
  Surface out;
  out.sigma1 = sigma[0];
  out.sigma2 = sigma[1];
  out.tight_s1 = std::sqrt(std::max(0.0, 1.0 / (sigma[1] * sigma[1]) - 1.0 / (sigma[0] * sigma[0])));
  const auto count = static_cast<Index>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (Index k = 0; k < count; ++k) {
    double s = lo + static_cast<double>(k) * step;
    if (std::abs(s) < step * 1e-9) s = 0;
    out.axis.push_back(s);
  }
  out.points.reserve(out.axis.size() * out.axis.size());
  for (double s1 : out.axis) {
    for (double s2 : out.axis) {
      const EigenPair e = dual_eigs_2x3(sigma[0], sigma[1], s1, s2);
      out.points.push_back({s1, s2, e.larger, e.smaller});
    }
  }
  return out;
}

}  // namespace framedual
