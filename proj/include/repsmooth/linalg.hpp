#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "repsmooth/matrix.hpp"

namespace repsmooth {

// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Mat rref;  // rank() nonzero rows first, each with pivot entry 1
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Fraction-free Gauss-Jordan over the integers after clearing row
// denominators; the result is rescaled to a canonical rational RREF.
Echelon echelon(const Mat& m);

std::size_t rank(const Mat& m);

// Basis of ker(m), one vector per free column, with a 1 at that column.
std::vector<Vec> nullspace(const Mat& m);

// Some x with m x = b (free variables set to zero), or nullopt when the
// system is inconsistent.
std::optional<Vec> solve(const Mat& m, std::span<const Rational> b);

// Basis of the column space of m, taken from the original columns at the
// pivot positions.
std::vector<Vec> column_space(const Mat& m);

// Matrix whose columns are the given vectors (all of length rows).
Mat from_columns(std::span<const Vec> cols, std::size_t rows);

std::optional<Mat> inverse(const Mat& m);

// Dense rank by forward Bareiss elimination only; exposed so the sparse
// kernel can be checked against it.
std::size_t dense_rank(const Mat& m);

}  // namespace repsmooth
