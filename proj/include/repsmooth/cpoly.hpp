#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "repsmooth/ncpoly.hpp"

namespace repsmooth {

// Sparse exponent vector: (variable, exponent) sorted by variable, exponents > 0.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
std::uint32_t monomial_degree(const Monomial& m);

// Commutative polynomial with rational coefficients.
class CPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  CPoly() = default;
  static CPoly constant(const Rational& c);
  static CPoly variable(std::uint32_t v);
  static CPoly monomial(Monomial m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant coefficient (zero if absent).
  Rational constant_term() const;
  std::uint32_t degree() const;

  void add_term(const Monomial& m, const Rational& c);

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const Rational& s);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(CPoly a, const Rational& s) { return a *= s; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend bool operator==(const CPoly& a, const CPoly& b) = default;

  CPoly derivative(std::uint32_t v) const;
  Rational evaluate(std::span<const Rational> values) const;

 private:
  Terms terms_;
};

using VarNamer = std::function<std::string(std::uint32_t)>;
std::string to_string(const CPoly& p, const VarNamer& name);
std::string to_string(const Monomial& m, const VarNamer& name);

// Generic-matrix variable layout: xi_{l,i,j} -> l*n*n + i*n + j (0-based).
struct GenericLayout {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t num_vars() const { return m * n * n; }
  std::uint32_t index(std::uint32_t l, std::uint32_t i, std::uint32_t j) const { return (l * n + i) * n + j; }
  // "xi_{l,i,j}" with 1-based indices.
  std::string name(std::uint32_t v) const;
};

// n*n entries (row-major) of f evaluated on the generic matrices.
std::vector<CPoly> symbolic_entries(const NCPoly& f, std::uint32_t n);

// Values of the generic variables at a point, in layout order.
Vec flatten_point(std::span<const Mat> point);

}  // namespace repsmooth
