#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repsmooth/catalog.hpp"
#include "repsmooth/cohomology.hpp"

namespace repsmooth {

enum class Verdict { RegularCertified, SingularEvidence, Undecided };
std::string verdict_name(Verdict v);

struct AnalysisOptions {
  std::optional<Backend> only;     // restrict Ext^2 to one backend
  std::size_t budget = 0;          // bar complex budget; 0 = default
  std::uint64_t seed = 1;          // reference samples
  std::size_t reference_samples = 8;
};

struct PointAnalysis {
  std::string algebra;
  RepPoint point;
  std::size_t ambient = 0;  // m n^2
  std::size_t generators = 0;
  std::size_t nonzero_generators = 0;
  std::size_t jacobian_rank = 0;
  std::size_t tangent_jacobian = 0;
  std::size_t tangent_derivations = 0;
  std::size_t e0 = 0;
  std::size_t e1 = 0;
  bool euler_holds = false;
  std::vector<CohomologyReport> backends;
  std::vector<std::string> skipped;  // backend: reason
  std::vector<std::size_t> reference_tangents;
  Verdict verdict = Verdict::Undecided;
  std::string verdict_basis;
  std::string embedding;
};

// A bare presentation with its Fox resolution.
CatalogEntry entry_for_presentation(const AlgebraPresentation& a);

// Throws NotOnScheme when X is not a point.
PointAnalysis analyze_point(const CatalogEntry& e, const RepPoint& x, const AnalysisOptions& opt = {});

}  // namespace repsmooth
