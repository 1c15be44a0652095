#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repsmooth/fdalgebra.hpp"
#include "repsmooth/lie.hpp"
#include "repsmooth/presentation.hpp"
#include "repsmooth/resolution.hpp"
#include "repsmooth/sampler.hpp"

namespace repsmooth {

// Where an expected value comes from: a published statement, an
// independent computation (named in `oracle`), or an immediate identity.
enum class Source { Literature, Oracle, Immediate };
std::string source_name(Source s);
Source parse_source(const std::string& s);

struct ExpectedValue {
  std::string quantity;  // e.g. "tangent", "e2(koszul)", "h2(bar)"
  std::string at;        // point or module description
  std::string value;
  Source source = Source::Oracle;
  std::string oracle;    // required for Source::Oracle
};

// A finite-dimensional algebra isomorphic to a presented algebra; basis
// element i is the image of basis_words[i].
struct FDModel {
  FDAlgebra algebra;
  std::vector<NCPoly> basis_words;
};

struct NamedModule {
  std::string name;
  std::vector<Mat> action;  // left action per basis element
};

struct CatalogEntry {
  std::string name;
  std::string kind;  // "presentation", "fd-algebra", "lie"
  std::string description;

  std::optional<AlgebraPresentation> presentation;
  std::optional<BimoduleResolution> resolution;
  std::optional<std::uint32_t> koszul_vars;  // A = k[x1..xg] with commutator relations
  std::optional<LieStructure> lie;           // A = U(g) on the basis of g, or a bare Lie entry
  std::optional<FDModel> fd_model;
  std::optional<std::string> sampler;
  bool empty_scheme = false;

  std::optional<FDAlgebra> algebra;  // fd-algebra entries
  std::vector<NamedModule> modules;

  std::vector<ExpectedValue> expected;
};

std::vector<std::string> catalog_names();
// Built-in entry, re-validated. Throws UnknownEntry or ValidationError.
CatalogEntry load(const std::string& name);
// Validates FD associativity/unit, module laws, Lie data, and the resolution
// at sample points (d^2 = 0). Throws ValidationError.
void validate_entry(const CatalogEntry& e);

// L (x) R for modules drawn from the list, followed by a random sparse change
// of basis (signed permutation, diagonal scaling, one elementary operation).
Bimodule random_bimodule(const FDAlgebra& b, const std::vector<NamedModule>& modules, Rng& rng,
                         std::string* description = nullptr);

// Specific builders, also used directly by tests.
FDAlgebra group_algebra_cyclic(std::size_t order);
FDAlgebra group_algebra_s3();
FDAlgebra matrix_algebra(std::size_t r);
FDAlgebra truncated_polynomial(std::size_t r);  // k[x]/(x^r)
FDAlgebra split_product();                      // k x k
FDAlgebra path_algebra_a2();
FDAlgebra path_algebra_kronecker();

}  // namespace repsmooth
