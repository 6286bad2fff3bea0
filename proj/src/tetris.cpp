#include "framedual/tetris.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace framedual {

namespace {

constexpr double kSnap = 1e-9;

// Integer arithmetic helpers, exact on Rational and snapped on double.
bool is_integral(const Rational& x) { return denominator(x) == 1; }
bool is_integral(double x) { return std::abs(x - std::round(x)) <= kSnap; }

Rational floor_of(const Rational& x) {
  boost::multiprecision::cpp_int q = numerator(x) / denominator(x);
  if (x < 0 && Rational(q) != x) q -= 1;
  return Rational(q);
}
double floor_of(double x) { return is_integral(x) ? std::round(x) : std::floor(x); }

double as_double(const Rational& x) { return to_double(x); }
double as_double(double x) { return x; }

template <class T>
TetrisPlan build_plan(std::span<const T> lambdas) {
  const auto n = static_cast<Index>(lambdas.size());
  if (n == 0) throw FrameError(ErrorCode::InvalidSpectrum, "empty eigenvalue sequence");
  for (Index j = 0; j < n; ++j) {
    if (as_double(lambdas[static_cast<std::size_t>(j)]) < 2.0 - kSnap) {
      throw FrameError(ErrorCode::InvalidSpectrum,
                       "eigenvalue " + std::to_string(j + 1) + " is below 2; spectral tetris needs every eigenvalue >= 2");
    }
  }

  TetrisPlan plan;
  plan.n = n;
  for (const T& l : lambdas) plan.eigenvalues.push_back(as_double(l));

  // k_i: prefix lengths with integral sums.
  std::vector<bool> in_k(static_cast<std::size_t>(n + 1), false);
  in_k[0] = true;
  plan.k_list.push_back(0);
  T prefix = T(0);
  for (Index k = 1; k <= n; ++k) {
    prefix += lambdas[static_cast<std::size_t>(k - 1)];
    if (is_integral(prefix)) {
      plan.k_list.push_back(k);
      in_k[static_cast<std::size_t>(k)] = true;
    }
  }
  if (!in_k[static_cast<std::size_t>(n)]) {
    throw FrameError(ErrorCode::InvalidSpectrum, "eigenvalues must sum to an integer");
  }
  plan.mu = static_cast<Index>(plan.k_list.size()) - 1;

  // Row layout: lambda_j = carry + m_j + r_j, carry = 2 - r_{j-1} inside a run.
  Index column = 0;
  T previous_residual = T(0);
  for (Index j = 0; j < n; ++j) {
    const T carry = in_k[static_cast<std::size_t>(j)] ? T(0) : T(2) - previous_residual;
    const T rest = lambdas[static_cast<std::size_t>(j)] - carry;
    const T ones = floor_of(rest);
    T residual = rest - ones;
    const bool closes_run = in_k[static_cast<std::size_t>(j + 1)];
    if (closes_run) residual = T(0);

    TetrisRow row;
    row.ones = static_cast<Index>(std::llround(as_double(ones)));
    row.residual = as_double(residual);
    row.first_column = column;
    column += row.ones;
    if (!closes_run) {
      row.block = TetrisBlock{std::sqrt(row.residual / 2.0), std::sqrt(1.0 - row.residual / 2.0)};
      row.block_column = column;
      column += 2;
    }
    plan.rows.push_back(row);
    previous_residual = residual;
  }
  plan.m = column;
  if (std::abs(static_cast<double>(plan.m) - as_double(prefix)) > kSnap) {
    throw FrameError(ErrorCode::InvalidSpectrum, "column bookkeeping does not add up to the eigenvalue sum");
  }

  for (Index i = 0; i < plan.mu; ++i) {
    if (plan.k_list[static_cast<std::size_t>(i + 1)] == plan.k_list[static_cast<std::size_t>(i)] + 1) {
      plan.consecutive_steps.push_back(i);
    }
  }

  // Interior rows j0 (1-based) with k_i + 1 < j0 < k_{i+1} hosting a unit column.
  for (Index i = 0; i < plan.mu; ++i) {
    const Index start = plan.k_list[static_cast<std::size_t>(i)] + 1;
    const Index stop = plan.k_list[static_cast<std::size_t>(i + 1)];
    for (Index j0 = start + 1; j0 < stop; ++j0) {
      T through = T(0);
      T before = T(0);
      for (Index j = start; j <= j0; ++j) {
        through += lambdas[static_cast<std::size_t>(j - 1)];
        if (j < j0) before += lambdas[static_cast<std::size_t>(j - 1)];
      }
      const T excess = through - (floor_of(before) + T(2));
      if (as_double(excess) >= 1.0 - kSnap) plan.interior_unit_rows.push_back(j0 - 1);
    }
  }

  plan.k_hat = 2 * plan.mu + static_cast<Index>(plan.interior_unit_rows.size()) -
               static_cast<Index>(plan.consecutive_steps.size());
  return plan;
}

}  // namespace

TetrisPlan tetris_plan(std::span<const Rational> eigenvalues) { return build_plan<Rational>(eigenvalues); }

TetrisPlan tetris_plan(std::span<const double> eigenvalues) { return build_plan<double>(eigenvalues); }

FrameMatrix tetris_frame(const TetrisPlan& plan) {
  RealMatrix phi = RealMatrix::Zero(plan.n, plan.m);
  for (Index j = 0; j < plan.n; ++j) {
    const TetrisRow& row = plan.rows[static_cast<std::size_t>(j)];
    for (Index k = 0; k < row.ones; ++k) phi(j, row.first_column + k) = 1.0;
    if (row.block) {
      phi(j, row.block_column) = row.block->top;
      phi(j, row.block_column + 1) = row.block->top;
      phi(j + 1, row.block_column) = row.block->bottom;
      phi(j + 1, row.block_column + 1) = -row.block->bottom;
    }
  }
  return FrameMatrix(std::move(phi));
}

Index tetris_sparsity(const TetrisPlan& plan) { return plan.k_hat + 2 * (plan.n - plan.k_hat); }

FrameMatrix tetris_sparse_dual(const TetrisPlan& plan) {
  RealMatrix psi = RealMatrix::Zero(plan.n, plan.m);
  for (Index j = 0; j < plan.n; ++j) {
    const TetrisRow& row = plan.rows[static_cast<std::size_t>(j)];
    if (row.ones > 0) {
      psi(j, row.first_column) = 1.0;
    } else if (row.block) {
      const double value = 1.0 / (2.0 * row.block->top);
      psi(j, row.block_column) = value;
      psi(j, row.block_column + 1) = value;
    } else {
      // Closes a run without unit columns: use the block hanging from the row above.
      const TetrisRow& above = plan.rows[static_cast<std::size_t>(j - 1)];
      const double value = 1.0 / (2.0 * above.block->bottom);
      psi(j, above.block_column) = value;
      psi(j, above.block_column + 1) = -value;
    }
  }
  return FrameMatrix(std::move(psi));
}

std::vector<Index> rows_with_unit_column(const Matrix& frame, double tol) {
  const RealMatrix phi = frame.to_real();
  std::vector<Index> rows;
  for (Index j = 0; j < phi.rows(); ++j) {
    for (Index c = 0; c < phi.cols(); ++c) {
      const auto col = phi.col(c);
      double off = 0;
      for (Index r = 0; r < phi.rows(); ++r)
        if (r != j) off = std::max(off, std::abs(col(r)));
      if (off <= tol && std::abs(col(j) - 1.0) <= tol) {
        rows.push_back(j);
        break;
      }
    }
  }
  return rows;
}

}  // namespace framedual
