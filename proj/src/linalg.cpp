#include "repsmooth/linalg.hpp"

#include <stdexcept>

#include "repsmooth/error.hpp"
#include "repsmooth/sparse.hpp"

namespace repsmooth {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Clear denominators row by row. Row scaling preserves rank and row space.
IntRows integerize(const Mat& m) {
  IntRows rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rows;
}

void divexact(Integer& x, const Integer& d) {
  if (d == 1) return;
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
    throw std::logic_error("fraction-free elimination lost exactness");
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

// Matrices above this many entries with low density go through the sparse kernel.
constexpr std::size_t kSparseThreshold = 20000;

bool prefer_sparse(const Mat& m) {
  const std::size_t size = m.rows() * m.cols();
  if (size < kSparseThreshold) return false;
  std::size_t nnz = 0;
  for (const auto& x : m.entries())
    if (sgn(x) != 0) ++nnz;
  return nnz * 5 < size;
}

}  // namespace

std::size_t dense_rank(const Mat& m) {
  IntRows a = integerize(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = pivot * a[i][j] - f * a[r][j];
        divexact(a[i][j], prev);
      }
      a[i][c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

Echelon echelon(const Mat& m) {
  IntRows a = integerize(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  Echelon out;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer pivot = a[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Integer f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        a[i][j] = pivot * a[i][j] - f * a[r][j];
        divexact(a[i][j], prev);
      }
      a[i][c] = 0;
    }
    prev = pivot;
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = Mat(rows, cols);
  for (std::size_t i = 0; i < out.pivots.size(); ++i) {
    const Integer& d = a[i][out.pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      Rational q(a[i][j], d);
      q.canonicalize();
      out.rref(i, j) = q;
    }
  }
  return out;
}

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (prefer_sparse(m)) {
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(sparse_row(m.row(i)));
    return sparse_rank(m.cols(), std::move(rows));
  }
  return dense_rank(m);
}

std::vector<Vec> nullspace(const Mat& m) {
  const Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length differs from row count");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Echelon e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rref(i, m.cols());
  return x;
}

std::vector<Vec> column_space(const Mat& m) {
  const Echelon e = echelon(m);
  std::vector<Vec> basis;
  basis.reserve(e.rank());
  for (auto p : e.pivots) basis.push_back(m.col(p));
  return basis;
}

Mat from_columns(std::span<const Vec> cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = echelon(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.rref(i, n + j);
  return out;
}

}  // namespace repsmooth
