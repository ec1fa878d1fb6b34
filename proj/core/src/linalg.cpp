#include "tropical/linalg.hpp"

#include <functional>
#include <string>

#include "tropical/error.hpp"

namespace tropical {

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols)
    : TropicalMatrix(rows, cols, std::vector<MaxPlus>(rows * cols)) {}

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<MaxPlus> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "entry count " + std::to_string(entries_.size()) +
                                                  " does not match " + std::to_string(rows) + "x" +
                                                  std::to_string(cols));
  }
}

TropicalMatrix TropicalMatrix::identity(std::size_t n) {
  TropicalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MaxPlus::unit();
  return m;
}

TropicalMatrix TropicalMatrix::transposed() const {
  TropicalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

TropicalMatrix mat_oplus(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "mat_oplus needs equal shapes");
  }
  TropicalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = oplus(a(i, j), b(i, j));
  }
  return c;
}

TropicalMatrix mat_odot(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "mat_odot: inner dimensions differ");
  TropicalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      MaxPlus acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = oplus(acc, odot(a(i, k), b(k, j)));
      c(i, j) = acc;
    }
  }
  return c;
}

namespace {

OptimalAssignment permutation_engine(const TropicalMatrix& a) {
  const std::size_t n = a.rows();
  if (n > kPermutationEngineLimit) {
    throw Error(ErrorCode::PermutationEngineTooLarge,
                "permutation engine limited to " + std::to_string(kPermutationEngineLimit) + "x" +
                    std::to_string(kPermutationEngineLimit));
  }
  OptimalAssignment best{MaxPlus::bottom(), {}};
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::vector<Rational> partial(n + 1);
  partial[0] = 0;

  // Depth-first over every permutation; a Bottom entry makes the whole
  // product Bottom, so that subtree contributes nothing to the max.
  std::function<void(std::size_t)> visit = [&](std::size_t row) {
    if (row == n) {
      MaxPlus value(partial[n]);
      if (best.weight < value) {
        best.weight = std::move(value);
        best.permutation = perm;
      }
      return;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (used[col] || a(row, col).is_bottom()) continue;
      used[col] = true;
      perm[row] = col;
      partial[row + 1] = partial[row] + a(row, col).value();
      visit(row + 1);
      used[col] = false;
    }
  };
  visit(0);
  return best;
}

// Kuhn's augmenting paths on the finite-entry bipartite graph.
bool has_finite_perfect_matching(const TropicalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::ptrdiff_t> match_col(n, -1);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t row) {
    for (std::size_t col = 0; col < n; ++col) {
      if (a(row, col).is_bottom() || seen[col]) continue;
      seen[col] = true;
      if (match_col[col] < 0 || augment(static_cast<std::size_t>(match_col[col]))) {
        match_col[col] = static_cast<std::ptrdiff_t>(row);
        return true;
      }
    }
    return false;
  };
  for (std::size_t row = 0; row < n; ++row) {
    seen.assign(n, false);
    if (!augment(row)) return false;
  }
  return true;
}

// Hungarian method (potentials form) minimizing cost = -weight. Forbidden
// edges get a penalty low enough that no optimal matching uses one once a
// finite perfect matching is known to exist.
OptimalAssignment assignment_engine(const TropicalMatrix& a) {
  const std::size_t n = a.rows();
  if (!has_finite_perfect_matching(a)) return {MaxPlus::bottom(), {}};

  Rational wmax, wmin;
  bool first = true;
  for (const auto& e : a.entries()) {
    if (e.is_bottom()) continue;
    if (first || e.value() > wmax) wmax = e.value();
    if (first || e.value() < wmin) wmin = e.value();
    first = false;
  }
  const Rational penalty = wmin - (Rational(static_cast<long>(n)) * (wmax - wmin) + 1);

  // cost[i][j], 1-based
  std::vector<std::vector<Rational>> cost(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[i + 1][j + 1] = a(i, j).is_bottom() ? Rational(-penalty) : Rational(-a(i, j).value());
    }
  }

  std::vector<Rational> u(n + 1), v(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = cost[i0][j] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  OptimalAssignment result{MaxPlus::bottom(), std::vector<std::size_t>(n)};
  Rational total = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t row = p[j] - 1;
    result.permutation[row] = j - 1;
    const MaxPlus& e = a(row, j - 1);
    if (e.is_bottom()) {
      throw Error(ErrorCode::InternalInconsistency, "assignment engine selected a forbidden edge");
    }
    total += e.value();
  }
  result.weight = MaxPlus(total);
  return result;
}

}  // namespace

OptimalAssignment optimal_assignment(const TropicalMatrix& a, DeterminantEngine engine) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "tropical determinant needs a square matrix");
  return engine == DeterminantEngine::Permutation ? permutation_engine(a) : assignment_engine(a);
}

MaxPlus tropical_determinant(const TropicalMatrix& a, DeterminantEngine engine) {
  return optimal_assignment(a, engine).weight;
}

bool is_row_regular(const TropicalMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < a.cols() && !any; ++j) any = a(i, j).is_finite();
    if (!any) return false;
  }
  return true;
}

bool is_det_regular(const TropicalMatrix& a) { return tropical_determinant(a).is_finite(); }

}  // namespace tropical
