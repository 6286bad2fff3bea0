#include "framedual/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace framedual {

std::string_view to_string(TightCase c) {
  switch (c) {
    case TightCase::Redundant2n: return "Redundant2n";
    case TightCase::Exact2nMinus1: return "Exact2nMinus1";
    case TightCase::Constrained: return "Constrained";
    case TightCase::AlreadyTight: return "AlreadyTight";
  }
  return "Unknown";
}

namespace {

constexpr double kSameValue = 1e-12;

std::vector<double> sigma_of(const FrameMatrix& frame) { return singular_values(frame.matrix()); }

// Builds U [diag(1/sigma) | s] V^* where row i of s is
// sqrt(q_i^2 - 1/sigma_i^2) e_{k(i)}.
ConstructedDual build_orthogonal_dual(const FrameMatrix& frame,
                                      const std::vector<std::pair<Index, double>>& rows) {
  DualParametrization p = parametrize(frame);
  const Index n = frame.n();
  std::vector<double> spectrum(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) spectrum[static_cast<std::size_t>(i)] = 1.0 / p.svd.singular_values[static_cast<std::size_t>(i)];

  RealMatrix block = RealMatrix::Zero(n, frame.redundancy_gap());
  Index direction = 0;
  for (const auto& [i, q] : rows) {
    const double canonical = 1.0 / p.svd.singular_values[static_cast<std::size_t>(i)];
    block(i, direction++) = std::sqrt(std::max(0.0, q * q - canonical * canonical));
    spectrum[static_cast<std::size_t>(i)] = q;
  }
  p.free_block = p.free_block.field() == Field::Complex ? Matrix(ComplexMatrix(block.cast<Complex>()))
                                                        : Matrix(block);
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  FrameMatrix dual = realize_dual(p);
  return {std::move(dual), std::move(p.free_block), std::move(spectrum)};
}

}  // namespace

TightDualSpec classify_tight_dual(const FrameMatrix& frame, std::optional<double> sigma_psi) {
  const std::vector<double> sigma = sigma_of(frame);
  const Index n = frame.n();
  const Index m = frame.m();
  const double smallest = sigma.back();
  const double minimal = 1.0 / smallest;

  TightDualSpec spec;
  for (double s : sigma)
    if (s > smallest * (1.0 + kMultiplicityTolerance)) ++spec.p;

  bool raised = false;
  spec.sigma_psi = minimal;
  if (sigma_psi) {
    if (!(*sigma_psi >= minimal * (1.0 - kSameValue))) {
      throw FrameError(ErrorCode::BoundInfeasible, "a tight dual needs sigma_psi >= 1/sigma_n = " + std::to_string(minimal));
    }
    raised = *sigma_psi > minimal * (1.0 + kSameValue);
    if (raised) spec.sigma_psi = *sigma_psi;
  }

  if (raised) {
    if (m < 2 * n) {
      throw FrameError(ErrorCode::BoundInfeasible,
                       "with m < 2n the only tight dual singular value is 1/sigma_n = " + std::to_string(minimal));
    }
    spec.tight_case = TightCase::Redundant2n;
    return spec;
  }
  if (spec.p == 0) {
    spec.tight_case = TightCase::AlreadyTight;
  } else if (m >= 2 * n) {
    spec.tight_case = TightCase::Redundant2n;
  } else if (m == 2 * n - 1) {
    spec.tight_case = TightCase::Exact2nMinus1;
  } else {
    spec.tight_case = TightCase::Constrained;
    if (spec.p > m - n) {
      throw FrameError(ErrorCode::NoTightDual,
                       "no tight dual: the smallest " + std::to_string(2 * n - m) + " singular values are not equal");
    }
  }
  return spec;
}

TightDual tight_dual(const FrameMatrix& frame, std::optional<double> sigma_psi) {
  const TightDualSpec spec = classify_tight_dual(frame, sigma_psi);
  const bool raised = spec.sigma_psi > (1.0 / sigma_of(frame).back()) * (1.0 + kSameValue);
  const Index adjusted = raised ? frame.n() : spec.p;
  std::vector<std::pair<Index, double>> rows;
  for (Index i = 0; i < adjusted; ++i) rows.emplace_back(i, spec.sigma_psi);
  return {build_orthogonal_dual(frame, rows), spec};
}

ConstructedDual prescribed_spectrum_dual(const FrameMatrix& frame, std::span<const SpectrumPick> picks) {
  if (static_cast<Index>(picks.size()) > frame.redundancy_gap()) {
    throw FrameError(ErrorCode::TooManyPicks, "at most m - n = " + std::to_string(frame.redundancy_gap()) +
                                                  " singular values can be prescribed");
  }
  const std::vector<double> sigma = sigma_of(frame);
  std::vector<bool> used(sigma.size(), false);
  std::vector<std::pair<Index, double>> rows;
  for (const SpectrumPick& pick : picks) {
    if (pick.index < 0 || pick.index >= frame.n()) {
      throw FrameError(ErrorCode::IndexOutOfRange, "pick index out of range");
    }
    if (used[static_cast<std::size_t>(pick.index)]) {
      throw FrameError(ErrorCode::InvalidArgument, "singular value " + std::to_string(pick.index + 1) + " picked twice");
    }
    used[static_cast<std::size_t>(pick.index)] = true;
    const double canonical = 1.0 / sigma[static_cast<std::size_t>(pick.index)];
    if (!(pick.value >= canonical * (1.0 - kSameValue))) {
      throw FrameError(ErrorCode::BelowCanonical, "requested value " + std::to_string(pick.value) +
                                                      " is below 1/sigma_" + std::to_string(pick.index + 1) +
                                                      " = " + std::to_string(canonical));
    }
    rows.emplace_back(pick.index, pick.value);
  }
  return build_orthogonal_dual(frame, rows);
}

SpectrumTarget spectrum_feasible(const FrameMatrix& frame, std::span<const double> target, double rel_tol) {
  const Index n = frame.n();
  const Index r = frame.redundancy_gap();
  if (static_cast<Index>(target.size()) != n) {
    throw FrameError(ErrorCode::BadTarget, "target needs exactly n = " + std::to_string(n) + " values");
  }
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (!(target[i] > 0)) throw FrameError(ErrorCode::BadTarget, "target values must be positive");
    if (i > 0 && target[i] > target[i - 1]) {
      throw FrameError(ErrorCode::BadTarget, "target must be sorted non-increasingly");
    }
  }
  const std::vector<double> sigma = sigma_of(frame);
  auto sig = [&](Index k) { return sigma[static_cast<std::size_t>(k)]; };

  SpectrumTarget out;
  out.values.assign(target.begin(), target.end());
  for (Index i = 0; i < n; ++i) {
    const double value = target[static_cast<std::size_t>(i)];
    const double lower = 1.0 / sig(n - 1 - i);
    if (value < lower * (1.0 - rel_tol)) out.violated.push_back({i, lower, true});
    if (i >= r) {
      const double upper = 1.0 / sig(n - i + r - 1);
      if (value > upper * (1.0 + rel_tol)) out.violated.push_back({i, upper, false});
    }
  }
  out.feasible = out.violated.empty();
  if (!out.feasible) return out;

  // Match target values against the canonical spectrum; unmatched canonical
  // values must be raised, at most r of them, each to a larger target value.
  struct Canonical {
    double value;
    Index index;
  };
  std::vector<Canonical> canonical;
  for (Index k = n - 1; k >= 0; --k) canonical.push_back({1.0 / sig(k), k});
  std::vector<double> spare_targets;
  std::vector<Canonical> spare_canonical;
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < target.size() || b < canonical.size()) {
    if (a == target.size()) {
      spare_canonical.push_back(canonical[b++]);
    } else if (b == canonical.size()) {
      spare_targets.push_back(target[a++]);
    } else if (std::abs(target[a] - canonical[b].value) <= rel_tol * canonical[b].value) {
      ++a;
      ++b;
    } else if (target[a] > canonical[b].value) {
      spare_targets.push_back(target[a++]);
    } else {
      spare_canonical.push_back(canonical[b++]);
    }
  }
  bool reachable = static_cast<Index>(spare_targets.size()) <= r;
  for (std::size_t k = 0; reachable && k < spare_targets.size(); ++k) {
    reachable = spare_targets[k] >= spare_canonical[k].value * (1.0 - rel_tol);
  }
  out.constructive = reachable;
  if (reachable) {
    for (std::size_t k = 0; k < spare_targets.size(); ++k) {
      out.picks.push_back({spare_canonical[k].index, spare_targets[k]});
    }
  }
  return out;
}

DualBoundRange dual_bound_range(const FrameMatrix& frame) {
  const std::vector<double> sigma = sigma_of(frame);
  const Index n = frame.n();
  const Index r = frame.redundancy_gap();
  const double smallest_canonical = 1.0 / (sigma.front() * sigma.front());
  const double largest_canonical = 1.0 / (sigma.back() * sigma.back());
  DualBoundRange range;
  range.upper = {largest_canonical, r == 0 ? largest_canonical : kInfinity};
  const double lower_cap =
      r >= n ? kInfinity : 1.0 / (sigma[static_cast<std::size_t>(r)] * sigma[static_cast<std::size_t>(r)]);
  range.lower = {smallest_canonical, lower_cap};
  return range;
}

std::vector<Interval> lambda_region(const FrameMatrix& frame) {
  const std::vector<double> sigma = sigma_of(frame);
  const Index n = frame.n();
  const Index r = frame.redundancy_gap();
  auto canonical_eig = [&](Index k) {
    if (k < 0) return kInfinity;
    const double s = sigma[static_cast<std::size_t>(n - 1 - k)];
    return 1.0 / (s * s);
  };
  std::vector<Interval> region;
  for (Index i = 0; i < n; ++i) region.push_back({canonical_eig(i), canonical_eig(i - r)});
  return region;
}

EigenPair dual_eigs_2x3(double sigma1, double sigma2, double s1, double s2) {
  if (!(sigma1 >= sigma2 && sigma2 > 0)) {
    throw FrameError(ErrorCode::InvalidArgument, "need sigma1 >= sigma2 > 0");
  }
  const double a = 1.0 / (sigma1 * sigma1) + s1 * s1;
  const double d = 1.0 / (sigma2 * sigma2) + s2 * s2;
  const double b = s1 * s2;
  const double trace = a + d;
  const double det = a * d - b * b;
  const double root = std::sqrt(std::max(0.0, trace * trace - 4.0 * det));
  return {0.5 * (trace + root), 0.5 * (trace - root)};
}

}  // namespace framedual
