// repsmooth: command-line front end. Every command prints one JSON report.
// Exit codes: 0 success, 2 mathematical negative, 1 usage or input error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "repsmooth/analysis.hpp"
#include "repsmooth/catalog.hpp"
#include "repsmooth/cocycle.hpp"
#include "repsmooth/deform.hpp"
#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"
#include "repsmooth/repscheme.hpp"
#include "repsmooth/scan.hpp"
#include "repsmooth/serialize.hpp"

using namespace repsmooth;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

struct Globals {
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  std::uint32_t degree_bound = 1;
  std::string backend;
  std::string out;
  bool timing = false;
  std::chrono::steady_clock::time_point start;
};

Globals g;

std::optional<Backend> backend_option() {
  if (g.backend.empty()) return std::nullopt;
  return parse_backend(g.backend);
}

void emit(const std::string& command, const Json& inputs, const Json& results, bool seeded) {
  std::optional<double> ms;
  if (g.timing)
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - g.start).count();
  const Json r = make_report(command, inputs, results, seeded ? std::optional<std::uint64_t>(g.seed) : std::nullopt, ms);
  const std::string text = r.dump(2) + "\n";
  if (g.out.empty())
    std::cout << text;
  else
    write_text_file(g.out, text);
}

Json read_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("inline JSON: ") + e.what());
    }
  }
  return read_json_file(arg);
}

// --catalog NAME|PATH or --presentation FILE.
CatalogEntry resolve_entry(const std::string& catalog, const std::string& presentation) {
  if (!catalog.empty() && !presentation.empty()) throw ParseError("give either --catalog or --presentation");
  if (!catalog.empty()) return load_entry(catalog);
  if (!presentation.empty()) return entry_for_presentation(presentation_from_json(read_json_arg(presentation)));
  throw ParseError("one of --catalog or --presentation is required");
}

Json entry_inputs(const CatalogEntry& e) {
  return e.presentation ? to_json(*e.presentation) : Json(e.name);
}

// An FD algebra: catalog fd-algebra, the FD model of a presented entry, or a JSON file.
struct AlgebraArg {
  FDAlgebra algebra;
  std::vector<NamedModule> modules;
};

AlgebraArg resolve_algebra(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    const Json j = read_json_file(arg);
    if (j.contains("products")) return {algebra_from_json(j), {}};
  }
  const CatalogEntry e = load_entry(arg);
  if (e.algebra) return {*e.algebra, e.modules};
  if (e.fd_model) return {e.fd_model->algebra, {}};
  throw ValidationError(e.name + " has no finite-dimensional algebra");
}

const NamedModule& find_module(const AlgebraArg& a, const std::string& name) {
  for (const auto& m : a.modules)
    if (m.name == name) return m;
  throw ParseError("unknown module '" + name + "'");
}

Vec character_of(const NamedModule& m) {
  if (m.action.empty() || m.action.front().rows() != 1) throw ParseError("module '" + m.name + "' is not one-dimensional");
  Vec f;
  for (const auto& x : m.action) f.push_back(x(0, 0));
  return f;
}

// "regular", "augmentation", a one-dimensional module name (character),
// "L,R" (L (x) R), or a bimodule JSON file.
Bimodule resolve_bimodule(const AlgebraArg& a, const std::string& spec) {
  Bimodule m;
  if (spec.empty() || spec == "augmentation") {
    // Character through the first one-dimensional module, else e_0 -> 1.
    for (const auto& x : a.modules)
      if (!x.action.empty() && x.action.front().rows() == 1) return Bimodule::character(character_of(x));
    throw ParseError("no one-dimensional module; pass --module");
  }
  if (spec == "regular") {
    m = Bimodule::regular(a.algebra);
  } else if (std::filesystem::exists(spec)) {
    m = bimodule_from_json(read_json_file(spec));
  } else if (const auto comma = spec.find(','); comma != std::string::npos) {
    m = Bimodule::tensor(find_module(a, spec.substr(0, comma)).action, find_module(a, spec.substr(comma + 1)).action);
  } else {
    m = Bimodule::character(character_of(find_module(a, spec)));
  }
  m.validate(a.algebra);
  return m;
}

RepPoint resolve_point(const CatalogEntry& e, const std::string& arg, std::uint32_t n) {
  if (!arg.empty()) return point_from_json(read_json_arg(arg));
  return RepPoint::zero(e.presentation->m, n);
}

// ---- commands ----

int cmd_build_scheme(const std::string& catalog, const std::string& presentation, std::uint32_t n) {
  const CatalogEntry e = resolve_entry(catalog, presentation);
  if (!e.presentation) throw ValidationError(e.name + " is not a presented algebra");
  const CommIdealPresentation v = build_vn(*e.presentation, n);
  Json res = to_json(v);
  const auto cert = detect_unit(v, g.degree_bound);
  res["unit_certificate"] = cert ? to_json(v, *cert) : Json(nullptr);
  res["empty"] = cert.has_value();
  emit("build-scheme", {{"algebra", entry_inputs(e)}, {"n", n}, {"degree_bound", g.degree_bound}}, res, false);
  return kOk;
}

int cmd_analyze(const std::string& catalog, const std::string& presentation, const std::string& point) {
  const CatalogEntry e = resolve_entry(catalog, presentation);
  if (point.empty()) throw ParseError("--point is required");
  const RepPoint x = point_from_json(read_json_arg(point));
  AnalysisOptions opt;
  opt.only = backend_option();
  opt.budget = g.budget;
  opt.seed = g.seed;
  const PointAnalysis a = analyze_point(e, x, opt);
  emit("analyze-point", {{"algebra", entry_inputs(e)}, {"point", to_json(x)}, {"backend", g.backend}}, to_json(a), true);
  return kOk;
}

int cmd_scan(const std::string& catalog, std::uint32_t n, std::size_t samples, bool no_special, std::uint32_t lift,
             const std::string& csv) {
  const CatalogEntry e = load_entry(catalog);
  ScanConfig c;
  c.n = n;
  c.samples = samples;
  c.seed = g.seed;
  c.include_special = !no_special;
  c.lift_order = lift;
  c.backend = backend_option();
  c.budget = g.budget;
  const ScanReport r = scan(e, c);
  if (!csv.empty()) write_text_file(csv, strata_csv(r));
  emit("scan",
       {{"algebra", entry_inputs(e)}, {"n", n}, {"samples", samples}, {"special", !no_special}, {"lift_order", lift}},
       to_json(r), true);
  return r.violations.empty() ? kOk : kNegative;
}

int cmd_deform_tangent(const CatalogEntry& e, const RepPoint& x) {
  const Subspace t = tangent_vectors(*e.presentation, x);
  Json basis = Json::array();
  for (const auto& v : t.basis) {
    Json mats = Json::array();
    for (const auto& m : as_matrices(v, x.m(), x.n())) mats.push_back(to_json(m));
    basis.push_back(mats);
  }
  emit("deform tangent", {{"algebra", entry_inputs(e)}, {"point", to_json(x)}}, {{"dim", t.dim}, {"basis", basis}}, false);
  return kOk;
}

std::vector<Mat> resolve_direction(const CatalogEntry& e, const RepPoint& x, const std::string& direction,
                                   std::size_t index) {
  if (!direction.empty()) {
    const Json j = read_json_arg(direction);
    std::vector<Mat> d;
    for (const auto& m : j.is_object() ? j.at("matrices") : j) d.push_back(mat_from_json(m));
    return d;
  }
  const Subspace t = tangent_vectors(*e.presentation, x);
  if (index >= t.dim) throw ParseError("tangent index " + std::to_string(index) + " out of range (dim " +
                                       std::to_string(t.dim) + ")");
  return as_matrices(t.basis[index], x.m(), x.n());
}

int cmd_deform_integrate(const CatalogEntry& e, const RepPoint& x, const std::string& direction, std::size_t index,
                         std::uint32_t order) {
  const auto d = resolve_direction(e, x, direction, index);
  const IntegrationResult r = integrate(*e.presentation, x, d, order);
  Json dj = Json::array();
  for (const auto& m : d) dj.push_back(to_json(m));
  emit("deform integrate",
       {{"algebra", entry_inputs(e)}, {"point", to_json(x)}, {"direction", dj}, {"order", order}}, to_json(r), false);
  return r.obstruction ? kNegative : kOk;
}

int cmd_deform_lift(const CatalogEntry& e, const std::string& arc) {
  const TruncatedDeformation d = deformation_from_json(read_json_arg(arc));
  const LiftResult r = lift_step(*e.presentation, d);
  const Json inputs = {{"algebra", entry_inputs(e)}, {"arc", to_json(d)}};
  if (const auto* obs = std::get_if<ObstructionResidual>(&r)) {
    emit("deform lift", inputs, {{"lifted", false}, {"obstruction", to_json(*obs)}}, false);
    return kNegative;
  }
  emit("deform lift", inputs, {{"lifted", true}, {"arc", to_json(std::get<TruncatedDeformation>(r))}}, false);
  return kOk;
}

TwoCochain resolve_cochain(const std::string& arg, const FDAlgebra& b, const Bimodule& m) {
  if (arg.empty()) throw ParseError("--cochain is required");
  return cochain_from_json(read_json_arg(arg), b, m);
}

Json algebra_inputs(const std::string& alg, const std::string& module) { return {{"algebra", alg}, {"module", module}}; }

int cmd_cocycle(const std::string& action, const std::string& alg, const std::string& module, const std::string& cochain,
                const std::string& extension, const std::string& map, const std::string& catalog,
                const std::string& point, std::uint32_t n, std::uint32_t order) {
  if (action == "classify") {
    if (extension.empty()) throw ParseError("--extension is required");
    const HochschildExtension e = extension_from_json(read_json_arg(extension));
    const TwoCochain w = classify_extension(e);
    emit("cocycle classify", {{"extension", to_json(e)}}, {{"cochain", to_json(w)}, {"is_cocycle", is_cocycle(w)}},
         false);
    return kOk;
  }
  if (action == "amplify") {
    const CatalogEntry e = load_entry(catalog);
    if (!e.presentation) throw ValidationError(e.name + " is not a presented algebra");
    const RepPoint x = resolve_point(e, point, n);
    const ArtinianTruncation t = truncate(*e.presentation, x, order);
    const Bimodule k = Bimodule::character(t.augmentation);
    TwoCochain w = TwoCochain::zero(t.algebra, k);
    Json source;
    if (!cochain.empty()) {
      w = resolve_cochain(cochain, t.algebra, k);
      source = "given";
    } else {
      const HarrisonResult h = harrison2(t.algebra, k);
      if (h.dim == 0) {
        emit("cocycle amplify", {{"algebra", entry_inputs(e)}, {"point", to_json(x)}, {"order", order}},
             {{"truncation_dim", t.algebra.dim()}, {"harrison2", 0}, {"amplified", nullptr}}, false);
        return kNegative;
      }
      w = h.basis.front();
      source = "first Harrison class of the truncation";
    }
    const AmplifiedCochain a = amplify(w, *e.presentation, t.eta, g.degree_bound);
    const auto h = bounded_coboundary(a);
    Json words = Json::array();
    for (const auto& word : a.words) words.push_back(word_to_string(word));
    Json vals = Json::array();
    for (std::size_t i = 0; i < a.words.size(); ++i)
      for (std::size_t j = 0; j < a.words.size(); ++j)
        if (!a.at(i, j).is_zero())
          vals.push_back({{"pair", {word_to_string(a.words[i]), word_to_string(a.words[j])}}, {"value", to_json(a.at(i, j))}});
    emit("cocycle amplify",
         {{"algebra", entry_inputs(e)}, {"point", to_json(x)}, {"order", order}, {"degree_bound", g.degree_bound}},
         {{"truncation", to_json(t.algebra)},
          {"cochain_source", source},
          {"cochain", to_json(w)},
          {"words", words},
          {"amplified_nonzero", vals},
          {"cocycle_identity", true},
          {"bounded_coboundary", h.has_value()}},
         false);
    return kOk;
  }

  const AlgebraArg a = resolve_algebra(alg);
  if (action == "harrison") {
    const Bimodule m = resolve_bimodule(a, module);
    const HarrisonResult h = harrison2(a.algebra, m);
    Json basis = Json::array();
    for (const auto& w : h.basis) basis.push_back(to_json(w));
    emit("cocycle harrison", algebra_inputs(alg, module), {{"dim", h.dim}, {"basis", basis}}, false);
    return kOk;
  }
  const Bimodule m = resolve_bimodule(a, module);
  const TwoCochain w = resolve_cochain(cochain, a.algebra, m);
  const Json inputs = {{"algebra", alg}, {"module", module}, {"cochain", to_json(w)}};
  if (action == "check") {
    const bool ok = is_cocycle(w);
    emit("cocycle check", inputs, {{"is_cocycle", ok}, {"is_symmetric", is_symmetric(w)}}, false);
    return ok ? kOk : kNegative;
  }
  if (action == "solve") {
    const auto h = coboundary_witness(w);
    emit("cocycle solve", inputs, {{"coboundary", h.has_value()}, {"witness", h ? to_json(*h) : Json(nullptr)}}, false);
    return h ? kOk : kNegative;
  }
  if (action == "extend") {
    const HochschildExtension e = build_extension(w);
    emit("cocycle extend", inputs, to_json(e), false);
    return kOk;
  }
  if (action == "lift") {
    const HochschildExtension e = build_extension(w);
    Mat f = Mat::identity(a.algebra.dim());
    FDAlgebra source = a.algebra;
    if (!map.empty()) {
      const Json j = read_json_arg(map);
      source = resolve_algebra(j.at("source").get<std::string>()).algebra;
      f = mat_from_json(j.at("matrix"));
    }
    const auto lift = lift_algebra_map(source, f, e);
    emit("cocycle lift", inputs, {{"source", source.name()}, {"lifted", lift.has_value()},
                                  {"lift", lift ? to_json(*lift) : Json(nullptr)}}, false);
    return lift ? kOk : kNegative;
  }
  throw ParseError("unknown cocycle action '" + action + "'");
}

int cmd_catalog(const std::string& action, const std::string& name, const std::string& dir) {
  if (action == "list") {
    Json names = Json::array();
    for (const auto& nme : catalog_names()) names.push_back(nme);
    emit("catalog list", Json::object(), {{"entries", names}}, false);
    return kOk;
  }
  if (action == "show") {
    const CatalogEntry e = load_entry(name);
    emit("catalog show", {{"name", name}}, to_json(e), false);
    return kOk;
  }
  if (action == "export") {
    if (dir.empty()) throw ParseError("--dir is required");
    std::filesystem::create_directories(dir);
    for (const auto& nme : catalog_names())
      write_text_file((std::filesystem::path(dir) / (nme + ".json")).string(), to_json(load(nme)).dump(2) + "\n");
    emit("catalog export", {{"dir", dir}}, {{"written", catalog_names().size()}}, false);
    return kOk;
  }
  throw ParseError("unknown catalog action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  g.start = std::chrono::steady_clock::now();
  CLI::App app{"Representation schemes, Ext groups, Hochschild cocycles and deformations over the rationals"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--budget", g.budget, "bar complex budget (dim B^3 dim N); REPSMOOTH_BUDGET overrides the default");
  app.add_option("--degree-bound", g.degree_bound, "degree bound for unit search and word amplification");
  app.add_option("--backend", g.backend, "restrict Ext2 to one backend")
      ->check(CLI::IsMember({"bar", "koszul", "ce", "resolution"}));
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_flag("--timing", g.timing, "include wall time in the report");

  std::string catalog, presentation, point, csv, direction, arc, alg, module = "augmentation", cochain, extension, map, dir, name;
  std::uint32_t n = 1, order = 2, lift = 0;
  std::size_t samples = 50, index = 0;
  bool no_special = false;

  auto* build = app.add_subcommand("build-scheme", "ideal generators of V_n(A) and a unit search");
  build->add_option("--catalog", catalog, "catalog entry name or JSON path");
  build->add_option("--presentation", presentation, "presentation JSON file");
  build->add_option("--n", n, "matrix size")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze-point", "tangent, Ext groups and verdict at a point");
  analyze->add_option("--catalog", catalog, "catalog entry name or JSON path");
  analyze->add_option("--presentation", presentation, "presentation JSON file");
  analyze->add_option("--point", point, "point JSON file or inline JSON")->required();

  auto* scn = app.add_subcommand("scan", "sample points and stratify by tangent dimension");
  scn->add_option("--catalog", catalog, "catalog entry")->required();
  scn->add_option("--n", n, "matrix size")->check(CLI::PositiveNumber);
  scn->add_option("--samples", samples, "generic samples");
  scn->add_flag("--no-special", no_special, "skip special points");
  scn->add_option("--lift-order", lift, "integrate basis tangents to this order (heuristic)");
  scn->add_option("--csv", csv, "write the strata table here");

  auto* deform = app.add_subcommand("deform", "tangent vectors, lifting steps and integration");
  deform->require_subcommand(1);
  deform->fallthrough();
  auto add_point_opts = [&](CLI::App* c) {
    c->add_option("--catalog", catalog, "catalog entry name or JSON path");
    c->add_option("--presentation", presentation, "presentation JSON file");
    c->add_option("--point", point, "point JSON (default: the zero point)");
    c->add_option("--n", n, "matrix size of the zero point")->check(CLI::PositiveNumber);
  };
  auto* tangent = deform->add_subcommand("tangent", "basis of first-order deformations");
  add_point_opts(tangent);
  auto* integ = deform->add_subcommand("integrate", "lift X + tD order by order");
  add_point_opts(integ);
  integ->add_option("--direction", direction, "tangent matrices JSON (default: a basis tangent)");
  integ->add_option("--tangent-index", index, "basis tangent used when --direction is absent");
  integ->add_option("--order", order, "target order S (deformation mod t^S)");
  auto* lifts = deform->add_subcommand("lift", "one lifting step of a truncated arc");
  lifts->add_option("--catalog", catalog, "catalog entry name or JSON path");
  lifts->add_option("--presentation", presentation, "presentation JSON file");
  lifts->add_option("--arc", arc, "arc JSON")->required();

  auto* coc = app.add_subcommand("cocycle", "Hochschild and Harrison 2-cocycles");
  coc->require_subcommand(1);
  coc->fallthrough();
  std::string action;
  for (const char* a : {"check", "solve", "extend", "classify", "harrison", "amplify", "lift"}) {
    auto* c = coc->add_subcommand(a);
    c->callback([&action, a] { action = a; });
    if (std::string(a) == "classify") {
      c->add_option("--extension", extension, "extension JSON")->required();
    } else if (std::string(a) == "amplify") {
      c->add_option("--catalog", catalog, "presented catalog entry")->required();
      c->add_option("--point", point, "point JSON (default: the zero point)");
      c->add_option("--n", n, "matrix size of the zero point")->check(CLI::PositiveNumber);
      c->add_option("--order", order, "truncation order of the local ring");
      c->add_option("--cochain", cochain, "cochain on the truncation (default: a Harrison class)");
    } else {
      c->add_option("--algebra", alg, "finite-dimensional algebra")->required();
      c->add_option("--module", module, "regular | augmentation | NAME | L,R | bimodule JSON");
      if (std::string(a) != "harrison") c->add_option("--cochain", cochain, "cochain JSON")->required();
      if (std::string(a) == "lift") c->add_option("--map", map, "{\"source\": ALG, \"matrix\": ...} (default: identity)");
    }
  }

  auto* cat = app.add_subcommand("catalog", "built-in entries");
  cat->require_subcommand(1);
  std::string cat_action;
  cat->add_subcommand("list")->callback([&] { cat_action = "list"; });
  auto* show = cat->add_subcommand("show");
  show->add_option("name", name)->required();
  show->callback([&] { cat_action = "show"; });
  auto* exp = cat->add_subcommand("export");
  exp->add_option("--dir", dir)->required();
  exp->callback([&] { cat_action = "export"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return cmd_build_scheme(catalog, presentation, n);
    if (*analyze) return cmd_analyze(catalog, presentation, point);
    if (*scn) return cmd_scan(catalog, n, samples, no_special, lift, csv);
    if (*deform) {
      const CatalogEntry e = resolve_entry(catalog, presentation);
      if (!e.presentation) throw ValidationError(e.name + " is not a presented algebra");
      if (*lifts) return cmd_deform_lift(e, arc);
      const RepPoint x = resolve_point(e, point, n);
      if (*tangent) return cmd_deform_tangent(e, x);
      return cmd_deform_integrate(e, x, direction, index, order);
    }
    if (*coc) return cmd_cocycle(action, alg, module, cochain, extension, map, catalog, point, n, order);
    if (*cat) return cmd_catalog(cat_action, name, dir);
  } catch (const NotOnScheme& e) {
    std::cerr << "error: point is not on the scheme: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
