#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "repsmooth/fdalgebra.hpp"
#include "repsmooth/lie.hpp"
#include "repsmooth/presentation.hpp"
#include "repsmooth/resolution.hpp"

namespace repsmooth {

struct Subspace {
  std::size_t dim = 0;
  std::vector<Vec> basis;
};

// phi -> ([X_l, phi])_l; its kernel is End_A(M).
Mat centralizer_map(const RepPoint& x);
// D -> (leibniz(f, X, D))_f over all relations; D flattened generator-major.
Mat derivation_constraints(const AlgebraPresentation& a, const RepPoint& x);

Subspace ext0(const AlgebraPresentation& a, const RepPoint& x);
Subspace derivation_space(const AlgebraPresentation& a, const RepPoint& x);
std::size_t tangent_dim_via_derivations(const AlgebraPresentation& a, const RepPoint& x);
// dim Der - (n^2 - ext0).
std::size_t ext1(const AlgebraPresentation& a, const RepPoint& x);

enum class Backend { Bar, Koszul, CE, Resolution };
std::string backend_name(Backend b);
Backend parse_backend(const std::string& s);

struct CohomologyReport {
  Backend backend = Backend::Resolution;
  std::size_t e0 = 0;
  std::size_t e1 = 0;
  std::optional<std::size_t> e2;
  std::optional<std::size_t> z1;
  std::optional<std::size_t> z2;
  std::vector<Vec> e0_basis;
  std::vector<Vec> e2_representatives;
};

// Budget for the bar complex in units of dim(B)^3 dim(N); REPSMOOTH_BUDGET
// overrides the default of 10^7.
std::size_t default_bar_budget();

// Hochschild cohomology via normalized bar cochains, degrees 0..2.
std::size_t h_bar(const FDAlgebra& b, const Bimodule& n, std::size_t degree, std::size_t budget = 0);
CohomologyReport bar_report(const FDAlgebra& b, const Bimodule& n, std::size_t budget = 0);

// Koszul complex of k[x1..xg] with coefficients in End(M); X must commute.
Mat koszul_differential(const RepPoint& x, std::size_t p);
std::size_t ext2_koszul(std::size_t g, const RepPoint& x);
CohomologyReport koszul_report(const RepPoint& x);

CohomologyReport ce_report(const LieStructure& g, const RepPoint& x);

// Hom complex of a resolution at X: e0, e1, z1 always; e2, z2 when F2 is known.
CohomologyReport ext2_resolution(const BimoduleResolution& r, const AlgebraPresentation& a, const RepPoint& x);

}  // namespace repsmooth
