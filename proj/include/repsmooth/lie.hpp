#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "repsmooth/matrix.hpp"

namespace repsmooth {

// Finite-dimensional Lie algebra: [x_i, x_j] = sum_k c(i, j, k) x_k.
struct LieStructure {
  std::string name;
  std::size_t dim = 0;
  std::vector<Rational> c;

  LieStructure() = default;
  LieStructure(std::string name, std::size_t dim) : name(std::move(name)), dim(dim), c(dim * dim * dim) {}

  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }
  Vec bracket(std::size_t i, std::size_t j) const;

  // Antisymmetry and Jacobi on all basis triples; throws ValidationError.
  void validate() const;

  // Relations x_i x_j - x_j x_i - [x_i, x_j] for i < j, as text.
  std::vector<std::string> enveloping_relations() const;

  static LieStructure sl2();  // basis e, f, h
  static LieStructure abelian(std::size_t dim);
};

// rho([x_i, x_j]) = [rho(x_i), rho(x_j)] on all basis pairs; throws ValidationError.
void validate_representation(const LieStructure& g, std::span<const Mat> rho);

// Irreducible sl2 module of dimension d: h v_k = (d - 1 - 2k) v_k,
// f v_k = v_{k+1}, e v_k = k (d - k) v_{k-1}. Matrices in the order e, f, h.
std::vector<Mat> sl2_irrep(std::size_t d);

// Dimensions of H^0, H^1, H^2 of the Chevalley-Eilenberg complex of g with
// coefficients in End(M), x.phi = [rho(x), phi].
struct CEReport {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
};

CEReport ce_cohomology(const LieStructure& g, std::span<const Mat> rho);
std::size_t ext2_ce(const LieStructure& g, std::span<const Mat> rho);

// Matrix of the CE differential C^p -> C^{p+1} (p = 0, 1, 2), cochains on
// increasing index tuples with End(M) flattened row-major.
Mat ce_differential(const LieStructure& g, std::span<const Mat> rho, std::size_t p);

// Increasing p-subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t d, std::size_t p);

}  // namespace repsmooth
