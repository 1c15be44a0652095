#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "repsmooth/fdalgebra.hpp"
#include "repsmooth/presentation.hpp"
#include "repsmooth/repscheme.hpp"

namespace repsmooth {

// Bilinear map B x B -> M stored on basis pairs.
struct TwoCochain {
  FDAlgebra base;
  Bimodule coeffs;
  std::vector<Vec> values;  // (i * dim B + j) -> omega(e_i, e_j)

  static TwoCochain zero(const FDAlgebra& b, const Bimodule& m);
  Vec& at(std::size_t i, std::size_t j) { return values[i * base.dim() + j]; }
  const Vec& at(std::size_t i, std::size_t j) const { return values[i * base.dim() + j]; }
  Vec operator()(std::span<const Rational> a, std::span<const Rational> b) const;
  TwoCochain& operator-=(const TwoCochain& o);
  TwoCochain& operator+=(const TwoCochain& o);
  friend bool operator==(const TwoCochain& a, const TwoCochain& b) { return a.values == b.values; }
};

// Linear maps B -> M are dim M x dim B matrices (column i = h(e_i)).
bool is_cocycle(const TwoCochain& w);
bool is_symmetric(const TwoCochain& w);
// (delta h)(a, b) = a h(b) - h(ab) + h(a) b.
TwoCochain coboundary(const FDAlgebra& b, const Bimodule& m, const Mat& h);

// Some h with delta h = w, or nullopt when [w] != 0. Works through the
// normalized complex. Throws ValidationError when w is not a cocycle.
std::optional<Mat> coboundary_witness(const TwoCochain& w);

// B (+)_w M with (b, m)(b', m') = (bb', m b' + b m' - w(b, b')).
struct HochschildExtension {
  FDAlgebra base;
  Bimodule coeffs;
  FDAlgebra total;  // basis: B basis, then M basis
  Mat p;            // dim B x dim E
  Mat i;            // dim E x dim M
  Mat sigma;        // dim E x dim B

  // Throws ValidationError naming the violated invariant.
  void validate() const;
};

HochschildExtension build_extension(const TwoCochain& w);
// theta(a, b) = sigma(ab) - sigma(a) sigma(b) read back through i.
TwoCochain classify_extension(const HochschildExtension& e);
// The same extension with the section sigma + i h.
HochschildExtension with_section(const HochschildExtension& e, const Mat& h);
// Algebra map f: E -> E' with f i = i' and p' f = p, found by solving for
// f(sigma(b) + i(m)) = sigma'(b) + i'(m + H b) from structure constants.
std::optional<Mat> find_equivalence(const HochschildExtension& e, const HochschildExtension& e2);

struct HarrisonResult {
  std::size_t dim = 0;
  std::vector<TwoCochain> basis;  // symmetric cocycles spanning the classes
};
// Throws ValidationError when R is not commutative or M is not symmetric.
HarrisonResult harrison2(const FDAlgebra& r, const Bimodule& m);

// Algebra maps between finite-dimensional algebras are dim B x dim A matrices.
bool is_algebra_map(const FDAlgebra& a, const FDAlgebra& b, const Mat& f);
// Returns f-bar: A -> E with p f-bar = f, or nullopt. Throws ValidationError
// when f is not an algebra map.
std::optional<Mat> lift_algebra_map(const FDAlgebra& a, const Mat& f, const HochschildExtension& e);
// A presented: f given by the images of the generators in B. Returns the
// images of the generators in E.
std::optional<std::vector<Vec>> lift_algebra_map(const AlgebraPresentation& a, const std::vector<Vec>& f,
                                                 const HochschildExtension& e);

// (a, b) -> (sum_s w(eta(a)_is, eta(b)_sj))_ij on words of A up to a bound.
struct AmplifiedCochain {
  AlgebraPresentation algebra;
  std::size_t n = 0;
  std::uint32_t degree_bound = 0;
  std::vector<NCWord> words;            // all words of length <= degree_bound
  std::vector<Mat> rho;                 // f(eta(x_l))
  std::vector<Mat> values;              // (a * words + b)
  const Mat& at(std::size_t a, std::size_t b) const { return values[a * words.size() + b]; }
};

// w must be a Hochschild cocycle of the commutative algebra B with values in
// a one-dimensional symmetric module k_f. Throws ValidationError when eta
// violates a relation of A, or when the amplified cochain fails the cocycle
// identity on the word set.
AmplifiedCochain amplify(const TwoCochain& w, const AlgebraPresentation& a, const std::vector<AlgMatrix>& eta,
                         std::uint32_t degree_bound);
// Linear h: B -> k applied entrywise to eta(a) for every word a up to `length`.
std::vector<Mat> amplify_map(const Mat& h, const FDAlgebra& b, const std::vector<AlgMatrix>& eta,
                             const std::vector<NCWord>& words);
// Solves delta h = w-bar on the word set with h(u r v) = 0 for every relation
// r and words u, v fitting in twice the bound. Returns h on all words of
// length <= 2 * bound, or nullopt.
std::optional<std::vector<Mat>> bounded_coboundary(const AmplifiedCochain& w);
std::vector<NCWord> words_up_to(std::uint32_t m, std::uint32_t length);

}  // namespace repsmooth
