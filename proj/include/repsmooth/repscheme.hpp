#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repsmooth/cpoly.hpp"
#include "repsmooth/fdalgebra.hpp"
#include "repsmooth/presentation.hpp"

namespace repsmooth {

// One n x n entry of one relation evaluated on the generic matrices.
struct IdealGenerator {
  CPoly poly;
  std::uint32_t relation = 0;
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  bool zero = false;  // identically vanishing; kept for provenance
};

// k[xi_{l,i,j}] / I with I generated by the entries of the relations.
struct CommIdealPresentation {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  GenericLayout layout;
  std::vector<IdealGenerator> generators;

  std::uint32_t num_vars() const { return layout.num_vars(); }
  std::size_t nonzero_count() const;
};

CommIdealPresentation build_vn(const AlgebraPresentation& a, std::uint32_t n);

struct RelationViolation {
  std::uint32_t relation = 0;
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  Rational value;
};

bool is_point(const AlgebraPresentation& a, const RepPoint& x);
std::optional<RelationViolation> first_violation(const AlgebraPresentation& a, const RepPoint& x);
// Throws NotOnScheme naming the first non-vanishing relation entry.
void require_point(const AlgebraPresentation& a, const RepPoint& x);

// Rows: generators in order; columns: variables in layout order.
Mat jacobian(const CommIdealPresentation& v, const RepPoint& x);
std::size_t jacobian_rank(const CommIdealPresentation& v, const RepPoint& x);
// m n^2 - rank J(X). Throws NotOnScheme when some generator is nonzero at X.
std::size_t jacobian_tangent_dim(const CommIdealPresentation& v, const RepPoint& x);

// sum_k coeff_k * multiplier_k * g_{generator_k} = value (nonzero constant).
struct UnitCertificate {
  struct Term {
    std::size_t generator = 0;
    Monomial multiplier;
    Rational coeff;
  };
  std::uint32_t degree_bound = 0;
  std::vector<Term> terms;
  Rational value;
};

// Linear search over multipliers of degree 0..degree_bound (smallest bound
// first). The certificate is scaled to a primitive integer vector whose
// first coefficient is positive.
std::optional<UnitCertificate> detect_unit(const CommIdealPresentation& v, std::uint32_t degree_bound = 1);
CPoly certificate_polynomial(const CommIdealPresentation& v, const UnitCertificate& c);

// n x n matrix with entries in a finite-dimensional algebra (row-major).
struct AlgMatrix {
  std::size_t n = 0;
  std::vector<Vec> entries;
  const Vec& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  Vec& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

// The artinian quotient R = V_n(A) / (I + m_X^order) at a point X together
// with the images eta(x_l) of the generic matrices and the evaluation
// character R -> k at X.
struct ArtinianTruncation {
  FDAlgebra algebra;
  std::vector<AlgMatrix> eta;
  Vec augmentation;
  std::vector<Monomial> basis;  // in the shifted variables xi - X
};

ArtinianTruncation truncate(const AlgebraPresentation& a, const RepPoint& x, std::uint32_t order);

}  // namespace repsmooth
