#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "repsmooth/matrix.hpp"

namespace repsmooth {

// Sorted (column, value) pairs; no stored zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

// Incrementally maintained echelon basis of a row space. Rows are reduced
// against the current pivots on insertion; pivot rows are kept monic.
class SparseRowSpace {
 public:
  explicit SparseRowSpace(std::size_t cols) : cols_(cols) {}

  // Returns true when the row was independent of everything inserted so far.
  bool insert(SparseRow row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::map<std::uint32_t, SparseRow> pivots_;
};

std::size_t sparse_rank(std::size_t cols, std::vector<SparseRow> rows);

SparseRow sparse_row(std::span<const Rational> dense);

}  // namespace repsmooth
