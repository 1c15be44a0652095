#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "repsmooth/analysis.hpp"
#include "repsmooth/catalog.hpp"
#include "repsmooth/cocycle.hpp"
#include "repsmooth/deform.hpp"
#include "repsmooth/repscheme.hpp"
#include "repsmooth/scan.hpp"

namespace repsmooth {

// Insertion-ordered so that reports read in a fixed field order.
using Json = nlohmann::ordered_json;

// Rationals are written as strings; integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json to_json(const Mat& m);
Mat mat_from_json(const Json& j);

// {"matrices": [...]}; n is inferred and checked.
Json to_json(const RepPoint& x);
RepPoint point_from_json(const Json& j);

// {"name", "generators", "relations"}
Json to_json(const AlgebraPresentation& a);
AlgebraPresentation presentation_from_json(const Json& j);

Json to_json(const CommIdealPresentation& v);
Json to_json(const CommIdealPresentation& v, const UnitCertificate& c);

Json to_json(const FDAlgebra& a);
FDAlgebra algebra_from_json(const Json& j);
Json to_json(const Bimodule& m);
Bimodule bimodule_from_json(const Json& j);
Json to_json(const LieStructure& g);
LieStructure lie_from_json(const Json& j);
Json to_json(const BimoduleResolution& r);
BimoduleResolution resolution_from_json(const Json& j);

Json to_json(const CohomologyReport& r);
Json to_json(const PointAnalysis& a);
Json to_json(const ScanReport& r);

Json to_json(const TruncatedDeformation& d);
TruncatedDeformation deformation_from_json(const Json& j);
Json to_json(const ObstructionResidual& r);
Json to_json(const IntegrationResult& r);

// Basis-pair table; the algebra and module come from the caller.
Json to_json(const TwoCochain& w);
TwoCochain cochain_from_json(const Json& j, const FDAlgebra& b, const Bimodule& m);
// Multiplication table of E together with p, i and sigma.
Json to_json(const HochschildExtension& e);
// Re-validated on load.
HochschildExtension extension_from_json(const Json& j);

Json to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const Json& j);
// A registered name or a path to a JSON entry; the result is validated.
CatalogEntry load_entry(const std::string& name_or_path);

std::string fnv1a_hex(const std::string& s);

// Envelope shared by all CLI reports.
Json make_report(const std::string& command, const Json& inputs, const Json& results, std::optional<std::uint64_t> seed,
                 std::optional<double> timing_ms = std::nullopt);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace repsmooth
