#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "repsmooth/lie.hpp"
#include "repsmooth/presentation.hpp"

namespace repsmooth {

// c * (left (x) right) in A (x) A^op; acts on a free generator e as left.e.right.
struct BimoduleTerm {
  Rational coeff;
  NCWord left;
  NCWord right;
};

// Matrix over A (x) A^op: entry (r, s) is the coefficient of the target
// generator s in the image of the source generator r.
struct BimoduleMap {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  std::vector<std::vector<BimoduleTerm>> entries;  // source_rank * target_rank

  BimoduleMap() = default;
  BimoduleMap(std::size_t source, std::size_t target)
      : source_rank(source), target_rank(target), entries(source * target) {}
  std::vector<BimoduleTerm>& at(std::size_t r, std::size_t s) { return entries[r * target_rank + s]; }
  const std::vector<BimoduleTerm>& at(std::size_t r, std::size_t s) const { return entries[r * target_rank + s]; }
};

// F2 -> F1 -> F0 -> A (x) A with F0 = (A^e)^m mapped by e_l -> x_l (x) 1 - 1 (x) x_l.
// d2 absent means F2 is unknown; present with f2 = 0 means the resolution stops.
struct BimoduleResolution {
  std::string name;
  std::uint32_t m = 0;
  std::size_t f1 = 0;
  BimoduleMap d1;
  std::optional<BimoduleMap> d2;

  std::size_t f0() const { return m; }
  std::optional<std::size_t> f2() const;
};

// F1 from the relations via Fox derivatives; F2 unknown unless there are no relations.
BimoduleResolution fox_resolution(const AlgebraPresentation& a);
// Koszul bimodule resolution of k[x1..xg] with the commutator relations
// x_i x_j - x_j x_i (i < j) in that order.
BimoduleResolution koszul_resolution(std::uint32_t g);
// Chevalley-Eilenberg bimodule resolution U (x) L^p g (x) U for p = 1, 2, 3,
// generators x_l = basis of g.
BimoduleResolution ce_resolution(const LieStructure& g);
// Periodic resolution of k[x]/(x^r): d1 = sum_{i+j=r-1} x^i (x) x^j, d2 = x (x) 1 - 1 (x) x.
BimoduleResolution periodic_resolution(std::uint32_t r);

// Hom_{A^e}(-, End(M)) matrices at a point; cochains flattened row-major.
Mat evaluate_hom(const BimoduleMap& map, const RepPoint& x);
Mat hom_d0(const RepPoint& x);

// Throws ValidationError unless d1 d0 = 0 and d2 d1 = 0 at x.
void validate_at(const BimoduleResolution& r, const RepPoint& x);

}  // namespace repsmooth
