#include "framedual/sparsity.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace framedual {

std::uint64_t binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (Index i = 1; i <= k; ++i) {
    const auto num = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

Index SparsityCertificate::total() const {
  Index sum = 0;
  for (const auto& row : rows) sum += row.spark;
  return sum;
}

namespace {

bool use_exact(const Matrix& a, const SearchOptions& options) {
  return a.is_exact() && !options.force_floating;
}

Matrix working_copy(const Matrix& a, const SearchOptions& options) {
  return use_exact(a, options) ? a : a.to_floating();
}

void check_budget(Index n, Index k, const SearchOptions& options) {
  const std::uint64_t count = binomial(n, k);
  if (count > options.subset_budget) {
    throw FrameError(ErrorCode::SizeLimit, "subset search needs C(" + std::to_string(n) + ", " +
                                               std::to_string(k) + ") = " + std::to_string(count) +
                                               " subsets, over the budget of " +
                                               std::to_string(options.subset_budget));
  }
}

Scalar divide(const Scalar& num, const Scalar& den) {
  if (num.field() == Field::Rational && den.field() == Field::Rational) {
    return Scalar(Rational(std::get<Rational>(num.value()) / std::get<Rational>(den.value())));
  }
  const Complex q = num.to_complex() / den.to_complex();
  if (num.field() == Field::Complex || den.field() == Field::Complex) return Scalar(q);
  return Scalar(q.real());
}

// A minimal support for one dual row together with the row it induces.
struct RowSolution {
  std::vector<Index> support;
  std::vector<Scalar> coefficients;
  Scalar scale;
};

// Dual rows satisfy Phi (psi^j)^* = e_j, so the stored entries are
// conj(coefficient / scale).
Scalar dual_entry(const Scalar& coefficient, const Scalar& scale) {
  const Scalar q = divide(coefficient, scale);
  if (q.field() == Field::Complex) return Scalar(std::conj(q.to_complex()));
  return q;
}

std::vector<RowSolution> minimal_row_solutions(const Matrix& phi, Index row, const SearchOptions& options,
                                               bool all) {
  const Index n = phi.rows();
  const Index m = phi.cols();
  std::vector<RowSolution> found;
  for (Index size = 1; size <= n && found.empty(); ++size) {
    check_budget(m, size, options);
    for_each_combination(m, size, [&](const std::vector<Index>& subset) {
      const Matrix columns = phi.select_columns(subset);
      if (rank_tol(columns, options.tolerance) < size) return true;
      const Matrix deleted = columns.remove_row(row);
      const Matrix kernel = nullspace_basis(deleted, options.tolerance);
      if (kernel.cols() == 0) return true;
      if (kernel.cols() > 1) {
        throw FrameError(ErrorCode::AmbiguousSupport,
                         "support admits a dependency space of dimension " + std::to_string(kernel.cols()) +
                             " for row " + std::to_string(row + 1));
      }
      const Matrix synthesized = columns * kernel;
      RowSolution solution{subset, {}, synthesized.at(row, 0)};
      if (solution.scale.is_zero()) {
        throw FrameError(ErrorCode::AmbiguousSupport, "degenerate scale on an independent support");
      }
      for (Index k = 0; k < size; ++k) solution.coefficients.push_back(kernel.at(k, 0));
      found.push_back(std::move(solution));
      return all;
    });
  }
  if (found.empty()) {
    throw FrameError(ErrorCode::RankDeficient, "no dual row exists; the input is not a frame");
  }
  return found;
}

Matrix assemble_rows(const Matrix& phi, const std::vector<const RowSolution*>& rows) {
  const Index n = phi.rows();
  const Index m = phi.cols();
  switch (phi.field()) {
    case Field::Rational: {
      RationalMatrix psi(n, m);
      for (Index j = 0; j < n; ++j) {
        const RowSolution& sol = *rows[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < sol.support.size(); ++k) {
          psi(j, sol.support[k]) = std::get<Rational>(dual_entry(sol.coefficients[k], sol.scale).value());
        }
      }
      return psi;
    }
    case Field::Real: {
      RealMatrix psi = RealMatrix::Zero(n, m);
      for (Index j = 0; j < n; ++j) {
        const RowSolution& sol = *rows[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < sol.support.size(); ++k) {
          psi(j, sol.support[k]) = dual_entry(sol.coefficients[k], sol.scale).to_complex().real();
        }
      }
      return psi;
    }
    case Field::Complex: {
      ComplexMatrix psi = ComplexMatrix::Zero(n, m);
      for (Index j = 0; j < n; ++j) {
        const RowSolution& sol = *rows[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < sol.support.size(); ++k) {
          psi(j, sol.support[k]) = dual_entry(sol.coefficients[k], sol.scale).to_complex();
        }
      }
      return psi;
    }
  }
  return {};
}

bool has_zero_column(const Matrix& a) {
  for (Index c = 0; c < a.cols(); ++c) {
    bool zero = true;
    for (Index r = 0; r < a.rows() && zero; ++r) zero = a.at(r, c).is_zero();
    if (zero) return true;
  }
  return false;
}

// Strict weak order on flattened entries.
bool entries_less(const Matrix& a, const Matrix& b) {
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) {
      const Scalar x = a.at(r, c);
      const Scalar y = b.at(r, c);
      if (x.field() == Field::Rational) {
        const auto& p = std::get<Rational>(x.value());
        const auto& q = std::get<Rational>(y.value());
        if (p != q) return p < q;
        continue;
      }
      const Complex u = x.to_complex();
      const Complex v = y.to_complex();
      if (u.real() != v.real()) return u.real() < v.real();
      if (u.imag() != v.imag()) return u.imag() < v.imag();
    }
  return false;
}

}  // namespace

SparkReport spark(const Matrix& a, const SearchOptions& options) {
  const Matrix work = working_copy(a, options);
  SparkReport report;
  report.tolerance_dependent = !work.is_exact();
  const Index last = std::min(work.rows() + 1, work.cols());
  for (Index size = 1; size <= last; ++size) {
    check_budget(work.cols(), size, options);
    for_each_combination(work.cols(), size, [&](const std::vector<Index>& subset) {
      if (rank_tol(work.select_columns(subset), options.tolerance) < size) {
        report.witness = subset;
        return false;
      }
      return true;
    });
    if (!report.witness.empty()) {
      report.spark = size;
      return report;
    }
  }
  report.spark = work.cols() + 1;
  return report;
}

Index generalized_spark(const FrameMatrix& frame, Index row, const SearchOptions& options) {
  if (row < 0 || row >= frame.n()) throw FrameError(ErrorCode::IndexOutOfRange, "row index out of range");
  const Matrix work = working_copy(frame.matrix(), options);
  return static_cast<Index>(minimal_row_solutions(work, row, options, false).front().support.size());
}

SparsestDual sparsest_dual(const FrameMatrix& frame, const SearchOptions& options) {
  const Matrix work = working_copy(frame.matrix(), options);
  SparsityCertificate certificate;
  certificate.tolerance_dependent = !work.is_exact();
  std::vector<RowSolution> solutions;
  for (Index j = 0; j < frame.n(); ++j) {
    solutions.push_back(std::move(minimal_row_solutions(work, j, options, false).front()));
  }
  std::vector<const RowSolution*> rows;
  for (Index j = 0; j < frame.n(); ++j) {
    const RowSolution& sol = solutions[static_cast<std::size_t>(j)];
    rows.push_back(&sol);
    certificate.rows.push_back(
        {j, static_cast<Index>(sol.support.size()), sol.support, sol.coefficients, sol.scale});
  }
  Matrix psi = assemble_rows(work, rows);
  certificate.degenerate = has_zero_column(psi);
  return {FrameMatrix(std::move(psi), options.tolerance), std::move(certificate)};
}

bool verify_certificate(const FrameMatrix& frame, const SparsityCertificate& certificate, double tol) {
  const Matrix& phi = frame.matrix();
  const bool exact = !certificate.tolerance_dependent && phi.is_exact();
  const Matrix work = exact ? phi : phi.to_floating();
  if (static_cast<Index>(certificate.rows.size()) != frame.n()) return false;

  std::vector<RowSolution> solutions;
  for (const RowCertificate& row : certificate.rows) {
    const auto size = static_cast<Index>(row.support.size());
    if (size != row.spark || row.coefficients.size() != row.support.size()) return false;
    const Matrix columns = work.select_columns(row.support);
    if (rank_tol(columns) < size) return false;

    // Phi_S * coefficients, computed entry-wise in the certificate's field.
    for (Index r = 0; r < frame.n(); ++r) {
      if (exact) {
        Rational sum = 0;
        for (Index k = 0; k < size; ++k) {
          sum += columns.rational()(r, k) * std::get<Rational>(row.coefficients[static_cast<std::size_t>(k)].value());
        }
        const Rational expected = r == row.row ? std::get<Rational>(row.scale.value()) : Rational(0);
        if (sum != expected) return false;
      } else {
        Complex sum = 0;
        double magnitude = 0;
        for (Index k = 0; k < size; ++k) {
          const Complex term = columns.at(r, k).to_complex() * row.coefficients[static_cast<std::size_t>(k)].to_complex();
          sum += term;
          magnitude += std::abs(term);
        }
        const Complex expected = r == row.row ? row.scale.to_complex() : Complex(0);
        if (std::abs(sum - expected) > tol * std::max(1.0, magnitude)) return false;
      }
    }
    if (row.scale.is_zero()) return false;
    solutions.push_back({row.support, row.coefficients, row.scale});
  }
  std::vector<const RowSolution*> rows;
  for (const auto& s : solutions) rows.push_back(&s);
  return is_dual(work, assemble_rows(work, rows), tol).is_dual;
}

SparsestDualSet enumerate_sparsest_duals(const FrameMatrix& frame, std::size_t limit,
                                         const SearchOptions& options) {
  const Matrix work = working_copy(frame.matrix(), options);
  SparsestDualSet result;
  result.tolerance_dependent = !work.is_exact();

  std::vector<std::vector<RowSolution>> per_row;
  std::uint64_t combinations = 1;
  for (Index j = 0; j < frame.n(); ++j) {
    per_row.push_back(minimal_row_solutions(work, j, options, true));
    result.sparsity += static_cast<Index>(per_row.back().front().support.size());
    combinations *= per_row.back().size();
    if (combinations > options.subset_budget) {
      throw FrameError(ErrorCode::SizeLimit, "too many sparsest duals to enumerate");
    }
  }

  std::vector<Matrix> duals;
  std::vector<std::size_t> choice(per_row.size(), 0);
  while (true) {
    std::vector<const RowSolution*> rows;
    for (std::size_t j = 0; j < per_row.size(); ++j) rows.push_back(&per_row[j][choice[j]]);
    duals.push_back(assemble_rows(work, rows));

    std::size_t j = per_row.size();
    while (j > 0 && ++choice[j - 1] == per_row[j - 1].size()) {
      choice[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
  }

  std::sort(duals.begin(), duals.end(), entries_less);
  duals.erase(std::unique(duals.begin(), duals.end(),
                          [](const Matrix& a, const Matrix& b) { return exactly_equal(a, b); }),
              duals.end());
  result.truncated = duals.size() > limit;
  if (result.truncated) duals.resize(limit);
  for (auto& d : duals) result.duals.emplace_back(std::move(d), options.tolerance);
  return result;
}

SparsityBounds sparsity_bounds(const FrameMatrix& frame, const SearchOptions& options) {
  SparsityBounds bounds;
  for (Index j = 0; j < frame.n(); ++j) {
    bounds.lower += spark(row_delete(frame, j), options).spark;
    bounds.exact += generalized_spark(frame, j, options);
  }
  bounds.upper = frame.n() * frame.n();
  return bounds;
}

FrameMatrix biorthogonal_dual(const FrameMatrix& frame, const std::optional<std::vector<Index>>& columns,
                              const SearchOptions& options) {
  const Matrix work = working_copy(frame.matrix(), options);
  const Index n = frame.n();
  std::vector<Index> chosen;
  if (columns) {
    chosen = *columns;
    if (static_cast<Index>(chosen.size()) != n) {
      throw FrameError(ErrorCode::SingularSubset, "biorthogonal dual needs exactly n columns");
    }
    if (rank_tol(work.select_columns(chosen), options.tolerance) < n) {
      throw FrameError(ErrorCode::SingularSubset, "selected columns are linearly dependent");
    }
  } else {
    check_budget(frame.m(), n, options);
    for_each_combination(frame.m(), n, [&](const std::vector<Index>& subset) {
      if (rank_tol(work.select_columns(subset), options.tolerance) == n) {
        chosen = subset;
        return false;
      }
      return true;
    });
  }

  const Matrix block = work.select_columns(chosen);
  Matrix inverse_adjoint;
  switch (block.field()) {
    case Field::Rational: inverse_adjoint = exact_inverse(block.rational()).adjoint(); break;
    case Field::Real: inverse_adjoint = RealMatrix(block.real().inverse().adjoint()); break;
    case Field::Complex: inverse_adjoint = ComplexMatrix(block.complex().inverse().adjoint()); break;
  }

  Matrix psi = Matrix::zero(n, frame.m(), work.field());
  switch (work.field()) {
    case Field::Rational: {
      RationalMatrix out(n, frame.m());
      for (Index r = 0; r < n; ++r)
        for (std::size_t k = 0; k < chosen.size(); ++k)
          out(r, chosen[k]) = inverse_adjoint.rational()(r, static_cast<Index>(k));
      psi = std::move(out);
      break;
    }
    case Field::Real: {
      RealMatrix out = RealMatrix::Zero(n, frame.m());
      for (std::size_t k = 0; k < chosen.size(); ++k) out.col(chosen[k]) = inverse_adjoint.real().col(static_cast<Index>(k));
      psi = std::move(out);
      break;
    }
    case Field::Complex: {
      ComplexMatrix out = ComplexMatrix::Zero(n, frame.m());
      for (std::size_t k = 0; k < chosen.size(); ++k)
        out.col(chosen[k]) = inverse_adjoint.complex().col(static_cast<Index>(k));
      psi = std::move(out);
      break;
    }
  }
  return FrameMatrix(std::move(psi), options.tolerance);
}

bool is_general_position(const Matrix& a, const SearchOptions& options) {
  if (a.rows() > a.cols()) {
    throw FrameError(ErrorCode::BadShape, "general position needs at least as many columns as rows");
  }
  if (a.rows() == 0) return true;
  const Matrix work = working_copy(a, options);
  check_budget(work.cols(), work.rows(), options);
  bool general = true;
  for_each_combination(work.cols(), work.rows(), [&](const std::vector<Index>& subset) {
    general = rank_tol(work.select_columns(subset), options.tolerance) == work.rows();
    return general;
  });
  return general;
}

bool projections_in_general_position(const FrameMatrix& frame, const SearchOptions& options) {
  for (Index j = 0; j < frame.n(); ++j) {
    if (spark(row_delete(frame, j), options).spark != frame.n()) return false;
  }
  return true;
}

}  // namespace framedual
