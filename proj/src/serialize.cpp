#include "repsmooth/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "repsmooth/error.hpp"

namespace repsmooth {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_from_json(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string string_from_json(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Json maybe(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json mats_to_json(const std::vector<Mat>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

std::vector<Mat> mats_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of matrices");
  std::vector<Mat> out;
  for (const auto& m : j) out.push_back(mat_from_json(m));
  return out;
}

Json map_to_json(const BimoduleMap& d) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < d.source_rank; ++r)
    for (std::size_t s = 0; s < d.target_rank; ++s) {
      if (d.at(r, s).empty()) continue;
      Json terms = Json::array();
      for (const auto& t : d.at(r, s))
        terms.push_back({{"coeff", to_json(t.coeff)}, {"left", word_to_string(t.left)}, {"right", word_to_string(t.right)}});
      entries.push_back({{"source", r}, {"target", s}, {"terms", terms}});
    }
  return {{"source_rank", d.source_rank}, {"target_rank", d.target_rank}, {"entries", entries}};
}

BimoduleMap map_from_json(const Json& j, std::uint32_t m) {
  BimoduleMap d(count_from_json(j, "source_rank"), count_from_json(j, "target_rank"));
  for (const auto& e : field(j, "entries")) {
    const std::size_t r = count_from_json(e, "source"), s = count_from_json(e, "target");
    if (r >= d.source_rank || s >= d.target_rank) throw ParseError("resolution entry out of range");
    for (const auto& t : field(e, "terms"))
      d.at(r, s).push_back({rational_from_json(field(t, "coeff")), parse_word(string_from_json(t, "left"), m),
                            parse_word(string_from_json(t, "right"), m)});
  }
  return d;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational entries must be strings like \"-3/4\" or integers");
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const Mat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    a.push_back(to_json(Vec(r.begin(), r.end())));
  }
  return a;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a matrix is an array of rows");
  if (j.empty()) return Mat();
  if (!j[0].is_array()) throw ParseError("a matrix row must be an array");
  const std::size_t cols = j[0].size();
  Mat m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Vec row = vec_from_json(j[i]);
    if (row.size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = row[k];
  }
  return m;
}

Json to_json(const RepPoint& x) { return {{"n", x.n()}, {"matrices", mats_to_json(x.mats())}}; }

RepPoint point_from_json(const Json& j) {
  const auto mats = mats_from_json(field(j, "matrices"));
  if (mats.empty()) throw ParseError("a point needs at least one matrix");
  for (const auto& m : mats)
    if (!m.is_square() || m.rows() != mats.front().rows())
      throw DimensionMismatch("point matrices must be square of a common size");
  RepPoint x(mats);
  if (j.contains("n") && count_from_json(j, "n") != x.n()) throw DimensionMismatch("declared n differs from matrix size");
  return x;
}

Json to_json(const AlgebraPresentation& a) {
  Json rels = Json::array();
  for (const auto& r : a.relations) rels.push_back(to_string(r));
  return {{"name", a.name}, {"generators", a.m}, {"relations", rels}};
}

AlgebraPresentation presentation_from_json(const Json& j) {
  std::vector<std::string> rels;
  for (const auto& r : field(j, "relations")) {
    if (!r.is_string()) throw ParseError("relations must be strings");
    rels.push_back(r.get<std::string>());
  }
  return AlgebraPresentation::parse(string_from_json(j, "name"), static_cast<std::uint32_t>(count_from_json(j, "generators")),
                                    rels);
}

Json to_json(const CommIdealPresentation& v) {
  const auto namer = [&](std::uint32_t k) { return v.layout.name(k); };
  Json vars = Json::array();
  for (std::uint32_t k = 0; k < v.num_vars(); ++k) vars.push_back(v.layout.name(k));
  Json gens = Json::array();
  for (const auto& g : v.generators)
    gens.push_back({{"relation", g.relation + 1},
                    {"row", g.row + 1},
                    {"col", g.col + 1},
                    {"zero", g.zero},
                    {"poly", to_string(g.poly, namer)}});
  return {{"n", v.n},
          {"m", v.m},
          {"num_vars", v.num_vars()},
          {"variables", vars},
          {"generator_count", v.generators.size()},
          {"nonzero_generators", v.nonzero_count()},
          {"generators", gens}};
}

Json to_json(const CommIdealPresentation& v, const UnitCertificate& c) {
  const auto namer = [&](std::uint32_t k) { return v.layout.name(k); };
  Json terms = Json::array();
  for (const auto& t : c.terms) {
    const auto& g = v.generators[t.generator];
    terms.push_back({{"generator", t.generator + 1},
                     {"entry", {g.relation + 1, g.row + 1, g.col + 1}},
                     {"multiplier", to_string(t.multiplier, namer)},
                     {"coeff", to_json(t.coeff)}});
  }
  return {{"degree_bound", c.degree_bound},
          {"terms", terms},
          {"value", to_json(c.value)},
          {"evaluated", to_string(certificate_polynomial(v, c), namer)}};
}

Json to_json(const FDAlgebra& a) {
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec p = a.basis_product(i, j);
      if (!is_zero(p)) products.push_back({{"i", i}, {"j", j}, {"value", to_json(p)}});
    }
  return {{"name", a.name()}, {"dim", a.dim()}, {"labels", a.labels()}, {"unit", to_json(a.unit())}, {"products", products}};
}

FDAlgebra algebra_from_json(const Json& j) {
  const std::size_t d = count_from_json(j, "dim");
  FDAlgebra a(string_from_json(j, "name"), d);
  for (const auto& p : field(j, "products")) {
    const std::size_t i = count_from_json(p, "i"), k = count_from_json(p, "j");
    const Vec v = vec_from_json(field(p, "value"));
    if (i >= d || k >= d || v.size() != d) throw ParseError("product entry out of range");
    for (std::size_t l = 0; l < d; ++l) a.c(i, k, l) = v[l];
  }
  if (j.contains("labels")) a.set_labels(j.at("labels").get<std::vector<std::string>>());
  a.set_unit(vec_from_json(field(j, "unit")));
  a.validate();
  return a;
}

Json to_json(const Bimodule& m) {
  return {{"dim", m.dim}, {"left", mats_to_json(m.left)}, {"right", mats_to_json(m.right)}};
}

Bimodule bimodule_from_json(const Json& j) {
  Bimodule m;
  m.dim = count_from_json(j, "dim");
  m.left = mats_from_json(field(j, "left"));
  m.right = mats_from_json(field(j, "right"));
  return m;
}

Json to_json(const LieStructure& g) {
  Json br = Json::array();
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j) {
      const Vec v = g.bracket(i, j);
      if (!is_zero(v)) br.push_back({{"i", i}, {"j", j}, {"value", to_json(v)}});
    }
  return {{"name", g.name}, {"dim", g.dim}, {"brackets", br}};
}

LieStructure lie_from_json(const Json& j) {
  LieStructure g(string_from_json(j, "name"), count_from_json(j, "dim"));
  for (const auto& b : field(j, "brackets")) {
    const std::size_t i = count_from_json(b, "i"), k = count_from_json(b, "j");
    const Vec v = vec_from_json(field(b, "value"));
    if (i >= g.dim || k >= g.dim || v.size() != g.dim) throw ParseError("bracket entry out of range");
    for (std::size_t l = 0; l < g.dim; ++l) {
      g.at(i, k, l) = v[l];
      g.at(k, i, l) = -v[l];
    }
  }
  g.validate();
  return g;
}

Json to_json(const BimoduleResolution& r) {
  Json j = {{"name", r.name}, {"generators", r.m}, {"f1", r.f1}, {"d1", map_to_json(r.d1)}};
  j["d2"] = r.d2 ? map_to_json(*r.d2) : Json(nullptr);
  return j;
}

BimoduleResolution resolution_from_json(const Json& j) {
  BimoduleResolution r;
  r.name = string_from_json(j, "name");
  r.m = static_cast<std::uint32_t>(count_from_json(j, "generators"));
  r.f1 = count_from_json(j, "f1");
  r.d1 = map_from_json(field(j, "d1"), r.m);
  if (r.d1.source_rank != r.f1 || r.d1.target_rank != r.m) throw ParseError("d1 has the wrong shape");
  if (j.contains("d2") && !j.at("d2").is_null()) {
    r.d2 = map_from_json(j.at("d2"), r.m);
    if (r.d2->target_rank != r.f1) throw ParseError("d2 has the wrong shape");
  }
  return r;
}

Json to_json(const CohomologyReport& r) {
  return {{"backend", backend_name(r.backend)}, {"e0", r.e0}, {"e1", r.e1}, {"e2", maybe(r.e2)},
          {"z1", maybe(r.z1)},                   {"z2", maybe(r.z2)}};
}

Json to_json(const PointAnalysis& a) {
  Json backends = Json::array();
  for (const auto& b : a.backends) backends.push_back(to_json(b));
  return {{"algebra", a.algebra},
          {"n", a.point.n()},
          {"point", to_json(a.point)},
          {"ambient_dim", a.ambient},
          {"ideal_generators", a.generators},
          {"nonzero_generators", a.nonzero_generators},
          {"jacobian_rank", a.jacobian_rank},
          {"tangent", {{"jacobian", a.tangent_jacobian}, {"derivations", a.tangent_derivations}}},
          {"e0", a.e0},
          {"e1", a.e1},
          {"euler", {{"identity", "tangent = n^2 - e0 + e1"}, {"holds", a.euler_holds}}},
          {"ext2", backends},
          {"skipped_backends", a.skipped},
          {"reference_tangents", a.reference_tangents},
          {"verdict", verdict_name(a.verdict)},
          {"verdict_basis", a.verdict_basis},
          {"embedding", a.embedding}};
}

Json to_json(const ScanReport& r) {
  Json recs = Json::array();
  for (const auto& x : r.records) {
    Json j = {{"index", x.index},
              {"family", x.family},
              {"special", x.special},
              {"point", to_json(x.point)},
              {"tangent", x.tangent},
              {"tangent_derivations", x.tangent_derivations},
              {"e0", x.e0},
              {"e1", x.e1},
              {"e2", maybe(x.e2)},
              {"e2_backend", x.e2 ? Json(x.e2_backend) : Json(nullptr)},
              {"z1", maybe(x.z1)},
              {"z2", maybe(x.z2)},
              {"verdict", verdict_name(x.verdict)}};
    if (r.config.lift_order > 0) j["lift_order"] = *x.lift_order;
    recs.push_back(std::move(j));
  }
  Json strata = Json::array();
  for (const auto& s : r.strata) strata.push_back({{"tangent", s.tangent}, {"count", s.count}, {"families", s.families}});
  Json viol = Json::array();
  for (const auto& v : r.violations)
    viol.push_back({{"index", v.index}, {"family", v.family}, {"tangent", v.tangent}, {"generic_min", v.generic_min}});
  Json out = {{"algebra", r.algebra},
              {"sampler", r.sampler},
              {"n", r.config.n},
              {"samples", r.config.samples},
              {"include_special", r.config.include_special},
              {"records", recs},
              {"strata", strata},
              {"semicontinuity_violations", viol}};
  if (r.config.lift_order > 0)
    out["lift_note"] = "lift_order is the smallest order reached by integrating basis tangents; finite-order arcs are a "
                       "heuristic for formal arcs";
  return out;
}

Json to_json(const TruncatedDeformation& d) {
  Json coeffs = Json::array();
  for (const auto& c : d.coeffs) coeffs.push_back(mats_to_json(c));
  return {{"base", to_json(d.base)}, {"order", d.order}, {"coefficients", coeffs}};
}

TruncatedDeformation deformation_from_json(const Json& j) {
  TruncatedDeformation d;
  d.base = point_from_json(field(j, "base"));
  d.order = static_cast<std::uint32_t>(count_from_json(j, "order"));
  for (const auto& c : field(j, "coefficients")) d.coeffs.push_back(mats_from_json(c));
  return d;
}

Json to_json(const ObstructionResidual& r) {
  Json span = Json::array();
  for (const auto& v : r.linearization_span) span.push_back(to_json(v));
  return {{"order", r.order}, {"residual", mats_to_json(r.residual)}, {"linearization_column_space", span}};
}

Json to_json(const IntegrationResult& r) {
  return {{"achieved_order", r.achieved_order},
          {"arc", to_json(r.arc)},
          {"obstruction", r.obstruction ? to_json(*r.obstruction) : Json(nullptr)}};
}

Json to_json(const TwoCochain& w) {
  Json vals = Json::array();
  const std::size_t d = w.base.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!is_zero(w.at(i, j))) vals.push_back({{"pair", {i, j}}, {"value", to_json(w.at(i, j))}});
  return {{"algebra", w.base.name()}, {"algebra_dim", d}, {"module_dim", w.coeffs.dim}, {"values", vals}};
}

TwoCochain cochain_from_json(const Json& j, const FDAlgebra& b, const Bimodule& m) {
  TwoCochain w = TwoCochain::zero(b, m);
  if (j.contains("algebra_dim") && count_from_json(j, "algebra_dim") != b.dim())
    throw DimensionMismatch("cochain was written for an algebra of another dimension");
  if (j.contains("module_dim") && count_from_json(j, "module_dim") != m.dim)
    throw DimensionMismatch("cochain was written for a module of another dimension");
  for (const auto& e : field(j, "values")) {
    const Json& pair = field(e, "pair");
    if (!pair.is_array() || pair.size() != 2) throw ParseError("pair must be [i, j]");
    const std::size_t i = pair[0].get<std::size_t>(), k = pair[1].get<std::size_t>();
    const Vec v = vec_from_json(field(e, "value"));
    if (i >= b.dim() || k >= b.dim() || v.size() != m.dim) throw ParseError("cochain entry out of range");
    w.at(i, k) = v;
  }
  return w;
}

Json to_json(const HochschildExtension& e) {
  return {{"base", to_json(e.base)},
          {"coefficients", to_json(e.coeffs)},
          {"total", to_json(e.total)},
          {"p", to_json(e.p)},
          {"i", to_json(e.i)},
          {"sigma", to_json(e.sigma)}};
}

HochschildExtension extension_from_json(const Json& j) {
  HochschildExtension e;
  e.base = algebra_from_json(field(j, "base"));
  e.coeffs = bimodule_from_json(field(j, "coefficients"));
  e.coeffs.validate(e.base);
  e.total = algebra_from_json(field(j, "total"));
  e.p = mat_from_json(field(j, "p"));
  e.i = mat_from_json(field(j, "i"));
  e.sigma = mat_from_json(field(j, "sigma"));
  if (e.p.rows() != e.base.dim() || e.p.cols() != e.total.dim() || e.i.rows() != e.total.dim() ||
      e.i.cols() != e.coeffs.dim || e.sigma.rows() != e.total.dim() || e.sigma.cols() != e.base.dim())
    throw DimensionMismatch("extension maps have the wrong shapes");
  e.validate();
  return e;
}

Json to_json(const CatalogEntry& e) {
  Json j = {{"name", e.name}, {"kind", e.kind}, {"description", e.description}};
  if (e.presentation) j["presentation"] = to_json(*e.presentation);
  if (e.resolution) j["resolution"] = to_json(*e.resolution);
  if (e.koszul_vars) j["koszul_vars"] = *e.koszul_vars;
  if (e.lie) j["lie"] = to_json(*e.lie);
  if (e.fd_model) {
    Json words = Json::array();
    for (const auto& w : e.fd_model->basis_words) words.push_back(to_string(w));
    j["fd_model"] = {{"algebra", to_json(e.fd_model->algebra)}, {"basis_words", words}};
  }
  if (e.sampler) j["sampler"] = *e.sampler;
  if (e.empty_scheme) j["empty_scheme"] = true;
  if (e.algebra) j["algebra"] = to_json(*e.algebra);
  if (!e.modules.empty()) {
    Json mods = Json::array();
    for (const auto& m : e.modules) mods.push_back({{"name", m.name}, {"action", mats_to_json(m.action)}});
    j["modules"] = mods;
  }
  Json ex = Json::array();
  for (const auto& v : e.expected) {
    Json x = {{"quantity", v.quantity}, {"at", v.at}, {"value", v.value}, {"source", source_name(v.source)}};
    if (!v.oracle.empty()) x["oracle"] = v.oracle;
    ex.push_back(std::move(x));
  }
  j["expected"] = ex;
  return j;
}

CatalogEntry entry_from_json(const Json& j) {
  CatalogEntry e;
  e.name = string_from_json(j, "name");
  e.kind = string_from_json(j, "kind");
  if (j.contains("description")) e.description = string_from_json(j, "description");
  if (j.contains("presentation")) e.presentation = presentation_from_json(j.at("presentation"));
  if (j.contains("resolution")) e.resolution = resolution_from_json(j.at("resolution"));
  if (j.contains("koszul_vars")) e.koszul_vars = static_cast<std::uint32_t>(count_from_json(j, "koszul_vars"));
  if (j.contains("lie")) e.lie = lie_from_json(j.at("lie"));
  if (j.contains("fd_model")) {
    const Json& f = j.at("fd_model");
    FDModel model{algebra_from_json(field(f, "algebra")), {}};
    const std::uint32_t m = e.presentation ? e.presentation->m : 1;
    for (const auto& w : field(f, "basis_words")) model.basis_words.push_back(NCPoly::parse(w.get<std::string>(), m));
    e.fd_model = std::move(model);
  }
  if (j.contains("sampler")) e.sampler = string_from_json(j, "sampler");
  if (j.contains("empty_scheme")) e.empty_scheme = j.at("empty_scheme").get<bool>();
  if (j.contains("algebra")) e.algebra = algebra_from_json(j.at("algebra"));
  if (j.contains("modules"))
    for (const auto& m : j.at("modules")) e.modules.push_back({string_from_json(m, "name"), mats_from_json(field(m, "action"))});
  if (j.contains("expected"))
    for (const auto& v : j.at("expected")) {
      ExpectedValue x{string_from_json(v, "quantity"), string_from_json(v, "at"), string_from_json(v, "value"),
                      parse_source(string_from_json(v, "source")), ""};
      if (v.contains("oracle")) x.oracle = string_from_json(v, "oracle");
      e.expected.push_back(std::move(x));
    }
  if (e.resolution && e.presentation && e.resolution->m != e.presentation->m)
    throw ValidationError(e.name + ": resolution and presentation disagree on the generator count");
  validate_entry(e);
  return e;
}

CatalogEntry load_entry(const std::string& name_or_path) {
  const std::filesystem::path p(name_or_path);
  if (p.extension() == ".json" || std::filesystem::exists(p)) return entry_from_json(read_json_file(name_or_path));
  return load(name_or_path);
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json make_report(const std::string& command, const Json& inputs, const Json& results, std::optional<std::uint64_t> seed,
                 std::optional<double> timing_ms) {
  Json r = {{"command", command}, {"inputs", inputs}, {"inputs_digest", fnv1a_hex(inputs.dump())}};
  r["seed"] = seed ? Json(*seed) : Json(nullptr);
  r["results"] = results;
  if (timing_ms) r["timing_ms"] = *timing_ms;
  return r;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace repsmooth
