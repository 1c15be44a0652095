#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "repsmooth/matrix.hpp"

namespace repsmooth {

// Finite-dimensional associative algebra given by structure constants:
// e_i e_j = sum_k c(i, j, k) e_k.
class FDAlgebra {
 public:
  FDAlgebra() = default;
  FDAlgebra(std::string name, std::size_t dim);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  const Vec& unit() const { return unit_; }
  void set_unit(Vec u);

  Vec basis(std::size_t i) const;
  Vec basis_product(std::size_t i, std::size_t j) const;
  Vec mul(std::span<const Rational> a, std::span<const Rational> b) const;

  // Matrices of x -> e_i x and x -> x e_i in the basis.
  Mat left_mult(std::size_t i) const;
  Mat right_mult(std::size_t i) const;

  bool is_associative() const;
  bool is_unital() const;
  bool is_commutative() const;
  // Throws ValidationError naming the first failing basis triple.
  void validate() const;

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
  Vec unit_;
};

// Bimodule over an FDAlgebra: for every basis element e_i, the matrices of
// v -> e_i . v and v -> v . e_i.
struct Bimodule {
  std::size_t dim = 0;
  std::vector<Mat> left;
  std::vector<Mat> right;

  Mat left_action(std::span<const Rational> b) const;
  Mat right_action(std::span<const Rational> b) const;

  bool is_symmetric() const;
  // Unital, associative on both sides, and the two actions commute.
  void validate(const FDAlgebra& algebra) const;

  // B as a bimodule over itself.
  static Bimodule regular(const FDAlgebra& b);
  // V (x) W with b.(v (x) w).b' = (lambda(b) v) (x) (mu(b')^T w); `left_module`
  // and `right_source` are left module action matrices per basis element.
  static Bimodule tensor(std::span<const Mat> left_module, std::span<const Mat> right_source);
  // One-dimensional symmetric module through an algebra map f: B -> k.
  static Bimodule character(std::span<const Rational> f);
  // End_k(M) through a representation rho (one n x n matrix per basis
  // element): b.phi.b' = rho(b) phi rho(b'), phi flattened row-major.
  static Bimodule endomorphisms(std::span<const Mat> rho);
  // P^{-1} (action) P for an invertible P.
  Bimodule conjugated(const Mat& p, const Mat& p_inv) const;
};

// Re-expresses an algebra in a basis whose first vector is the unit;
// normalized cochains then live on the remaining basis vectors.
struct UnitFirstBasis {
  FDAlgebra algebra;  // same algebra, new basis
  Mat to_old;         // columns: new basis vectors in old coordinates
  Mat to_new;         // inverse of to_old
  Bimodule transform(const Bimodule& m) const;
};

UnitFirstBasis unit_first(const FDAlgebra& b);

// Left action matrices of the left regular module (e_i acting on B).
std::vector<Mat> left_regular(const FDAlgebra& b);

// Checks that the matrices define a unital left module structure.
bool is_left_module(const FDAlgebra& b, std::span<const Mat> action);

}  // namespace repsmooth
