#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "repsmooth/rational.hpp"

namespace repsmooth {

using Vec = std::vector<Rational>;

// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat diagonal(std::span<const Rational> entries);
  // Column matrix from a vector.
  static Mat column(std::span<const Rational> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> entries() const { return data_; }
  Vec col(std::size_t j) const;

  bool is_zero() const;
  Mat transpose() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rational& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rational& s) { return a *= s; }
  friend Mat operator*(const Rational& s, Mat a) { return a *= s; }
  friend Mat operator-(Mat a) { return a *= Rational(-1); }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vec operator*(const Mat& m, std::span<const Rational> v);

// Commutator ab - ba.
Mat commutator(const Mat& a, const Mat& b);

// Kronecker product.
Mat kron(const Mat& a, const Mat& b);

// Stack matrices vertically; all must share a column count.
Mat vstack(std::span<const Mat> blocks);

// Row-major flattening into / out of a vector.
Vec flatten(const Mat& m);
Mat unflatten(std::span<const Rational> v, std::size_t rows, std::size_t cols);

bool is_zero(std::span<const Rational> v);

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace repsmooth
