#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repsmooth/matrix.hpp"

namespace repsmooth {

// A monomial of the free algebra: generator indices, 0-based. Empty = 1.
using NCWord = std::vector<std::uint32_t>;

// Degree first, then lexicographic.
struct GradedLex {
  bool operator()(const NCWord& a, const NCWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the free algebra k{x1..xm} with rational coefficients.
class NCPoly {
 public:
  using Terms = std::map<NCWord, Rational, GradedLex>;

  NCPoly() = default;
  explicit NCPoly(std::uint32_t generators) : m_(generators) {}

  static NCPoly constant(std::uint32_t generators, const Rational& c);
  static NCPoly generator(std::uint32_t generators, std::uint32_t index);
  static NCPoly word(std::uint32_t generators, NCWord w, const Rational& c = 1);

  // Parses text such as "3/2*x1*x2*x1 - x2 + 1" or "x1^2 - 2*x2". Generator
  // names are x1..xm (1-based). Throws ParseError.
  static NCPoly parse(std::string_view text, std::uint32_t generators);

  std::uint32_t generators() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  // Adds c * w, dropping the term if the coefficient cancels.
  void add_term(const NCWord& w, const Rational& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& s);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rational& s) { return a *= s; }
  friend NCPoly operator*(const Rational& s, NCPoly a) { return a *= s; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) = default;

 private:
  std::uint32_t m_ = 0;
  Terms terms_;
};

NCPoly nc_add(const NCPoly& f, const NCPoly& g);
NCPoly nc_mul(const NCPoly& f, const NCPoly& g);

// Highest-degree terms first, e.g. "3/2*x1*x2*x1 - x2 + 1"; "0" for zero.
std::string to_string(const NCPoly& f);
std::string word_to_string(const NCWord& w);
NCWord parse_word(std::string_view text, std::uint32_t generators);

// Evaluates f in any unital ring described by `ops`, which must provide
// one(), add(a, b), mul(a, b) and scale(Rational, a).
template <class T, class Ops>
T evaluate_in(const NCPoly& f, std::span<const T> gens, const Ops& ops) {
  T acc = ops.scale(Rational(0), ops.one());
  for (const auto& [w, c] : f.terms()) {
    T term = ops.one();
    for (auto l : w) term = ops.mul(term, gens[l]);
    acc = ops.add(acc, ops.scale(c, term));
  }
  return acc;
}

template <class T, class Ops>
T evaluate_word_in(const NCWord& w, std::span<const T> gens, const Ops& ops) {
  T term = ops.one();
  for (auto l : w) term = ops.mul(term, gens[l]);
  return term;
}

// f(X1..Xm) for n x n matrices. Throws DimensionMismatch.
Mat evaluate(const NCPoly& f, std::span<const Mat> point);
Mat evaluate_word(const NCWord& w, std::span<const Mat> point);

// Image of f under the unique derivation extending x_l -> D_l with
// respect to the representation X: sum over letters of
// X(prefix) * D_letter * X(suffix). Throws DimensionMismatch.
Mat leibniz(const NCPoly& f, std::span<const Mat> point, std::span<const Mat> direction);

}  // namespace repsmooth
