#include "repsmooth/sparse.hpp"

#include <algorithm>

namespace repsmooth {

namespace {

// row <- row - f * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -f * b->second);
      ++b;
    } else {
      Rational v = a->second - f * b->second;
      if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

bool SparseRowSpace::insert(SparseRow row) {
  while (!row.empty()) {
    const auto lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      const Rational inv = 1 / row.front().second;
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const Rational f = row.front().second;
    row = axpy(row, f, it->second);
  }
  return false;
}

std::size_t sparse_rank(std::size_t cols, std::vector<SparseRow> rows) {
  // Short rows first keeps pivot rows sparse.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  SparseRowSpace space(cols);
  for (auto& r : rows) {
    space.insert(std::move(r));
    if (space.rank() == cols) break;
  }
  return space.rank();
}

SparseRow sparse_row(std::span<const Rational> dense) {
  SparseRow row;
  for (std::size_t j = 0; j < dense.size(); ++j)
    if (sgn(dense[j]) != 0) row.emplace_back(static_cast<std::uint32_t>(j), dense[j]);
  return row;
}

}  // namespace repsmooth
