#include "repsmooth/catalog.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"
#include "repsmooth/repscheme.hpp"

namespace repsmooth {

std::string source_name(Source s) {
  switch (s) {
    case Source::Literature: return "literature";
    case Source::Oracle: return "oracle";
    case Source::Immediate: return "immediate";
  }
  return "oracle";
}

Source parse_source(const std::string& s) {
  if (s == "literature") return Source::Literature;
  if (s == "oracle") return Source::Oracle;
  if (s == "immediate") return Source::Immediate;
  throw ParseError("unknown source tag '" + s + "'");
}

FDAlgebra group_algebra_cyclic(std::size_t order) {
  FDAlgebra a("kZ" + std::to_string(order), order);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
    for (std::size_t j = 0; j < order; ++j) a.c(i, j, (i + j) % order) = 1;
  }
  a.set_labels(labels);
  Vec u(order);
  u[0] = 1;
  a.set_unit(u);
  return a;
}

namespace {

using Perm = std::array<std::size_t, 3>;

std::vector<Perm> s3_elements() {
  std::vector<Perm> out;
  Perm p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;  // identity first
}

// (p q)(i) = p(q(i))
Perm compose(const Perm& p, const Perm& q) { return {p[q[0]], p[q[1]], p[q[2]]}; }

std::size_t index_of(const std::vector<Perm>& g, const Perm& p) {
  return static_cast<std::size_t>(std::find(g.begin(), g.end(), p) - g.begin());
}

std::string perm_label(const Perm& p) { return "[" + std::to_string(p[0] + 1) + std::to_string(p[1] + 1) + std::to_string(p[2] + 1) + "]"; }

Mat scalar(const Rational& v) { return Mat{{v}}; }

}  // namespace

FDAlgebra group_algebra_s3() {
  const auto g = s3_elements();
  FDAlgebra a("kS3", g.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.size(); ++i) {
    labels.push_back(perm_label(g[i]));
    for (std::size_t j = 0; j < g.size(); ++j) a.c(i, j, index_of(g, compose(g[i], g[j]))) = 1;
  }
  a.set_labels(labels);
  Vec u(g.size());
  u[0] = 1;
  a.set_unit(u);
  return a;
}

FDAlgebra matrix_algebra(std::size_t r) {
  FDAlgebra a("mat-" + std::to_string(r), r * r);
  std::vector<std::string> labels;
  Vec u(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < r; ++l) a.c(i * r + j, j * r + l, i * r + l) = 1;
    }
  for (std::size_t i = 0; i < r; ++i) u[i * r + i] = 1;
  a.set_labels(labels);
  a.set_unit(u);
  return a;
}

FDAlgebra truncated_polynomial(std::size_t r) {
  FDAlgebra a("kx" + std::to_string(r), r);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    for (std::size_t j = 0; i + j < r; ++j) a.c(i, j, i + j) = 1;
  }
  a.set_labels(labels);
  Vec u(r);
  u[0] = 1;
  a.set_unit(u);
  return a;
}

FDAlgebra split_product() {
  FDAlgebra a("kxk", 2);
  a.c(0, 0, 0) = 1;
  a.c(1, 1, 1) = 1;
  a.set_labels({"e1", "e2"});
  a.set_unit({1, 1});
  return a;
}

FDAlgebra path_algebra_a2() {
  // Vertices e1, e2 and an arrow a: 1 -> 2 with a = e2 a e1.
  FDAlgebra p("path-A2", 3);
  p.c(0, 0, 0) = 1;
  p.c(1, 1, 1) = 1;
  p.c(1, 2, 2) = 1;
  p.c(2, 0, 2) = 1;
  p.set_labels({"e1", "e2", "a"});
  p.set_unit({1, 1, 0});
  return p;
}

FDAlgebra path_algebra_kronecker() {
  // Vertices e1, e2 and two arrows a, b: 1 -> 2.
  FDAlgebra p("kronecker", 4);
  p.c(0, 0, 0) = 1;
  p.c(1, 1, 1) = 1;
  for (std::size_t arrow : {2, 3}) {
    p.c(1, arrow, arrow) = 1;
    p.c(arrow, 0, arrow) = 1;
  }
  p.set_labels({"e1", "e2", "a", "b"});
  p.set_unit({1, 1, 0, 0});
  return p;
}

namespace {

// Representation V1 -> V2 of a quiver with vertices 1, 2; arrows given as
// dim V2 x dim V1 matrices.
std::vector<Mat> quiver_module(std::size_t d1, std::size_t d2, const std::vector<Mat>& arrows) {
  const std::size_t n = d1 + d2;
  Mat e1(n, n), e2(n, n);
  for (std::size_t i = 0; i < d1; ++i) e1(i, i) = 1;
  for (std::size_t i = 0; i < d2; ++i) e2(d1 + i, d1 + i) = 1;
  std::vector<Mat> out{e1, e2};
  for (const auto& a : arrows) {
    Mat m(n, n);
    for (std::size_t i = 0; i < d2; ++i)
      for (std::size_t j = 0; j < d1; ++j) m(d1 + i, j) = a(i, j);
    out.push_back(m);
  }
  return out;
}

std::vector<Mat> regular_action(const FDAlgebra& a) { return left_regular(a); }

// Action of a group algebra through a representation of its elements.
std::vector<Mat> s3_module(const std::function<Mat(const Perm&)>& rho) {
  std::vector<Mat> out;
  for (const auto& p : s3_elements()) out.push_back(rho(p));
  return out;
}

Mat perm_sign(const Perm& p) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
  return scalar(inv % 2 == 0 ? 1 : -1);
}

// Permutation action on {v in k^3 : sum v = 0} in the basis e1 - e3, e2 - e3.
Mat perm_standard(const Perm& p) {
  Mat out(2, 2);
  for (std::size_t b = 0; b < 2; ++b) {
    Vec v(3);
    v[p[b]] += 1;
    v[p[2]] -= 1;
    out(0, b) = v[0];
    out(1, b) = v[1];
  }
  return out;
}

std::vector<Mat> power_module(std::size_t r, const Mat& g) {
  std::vector<Mat> out;
  Mat cur = Mat::identity(g.rows());
  for (std::size_t i = 0; i < r; ++i) {
    out.push_back(cur);
    cur = cur * g;
  }
  return out;
}

ExpectedValue ev(std::string q, std::string at, std::string v, Source s, std::string oracle = "") {
  return {std::move(q), std::move(at), std::move(v), s, std::move(oracle)};
}

AlgebraPresentation presentation(const std::string& name, std::uint32_t m, std::vector<std::string> rels) {
  return AlgebraPresentation::parse(name, m, rels);
}

CatalogEntry free_entry(std::uint32_t m) {
  CatalogEntry e;
  e.name = "free-" + std::to_string(m);
  e.kind = "presentation";
  e.description = "free algebra on " + std::to_string(m) + " generator" + (m > 1 ? "s" : "");
  e.presentation = AlgebraPresentation::free(m);
  e.resolution = fox_resolution(*e.presentation);
  e.sampler = "free-" + std::to_string(m);
  for (std::uint32_t n = 1; n <= 3; ++n)
    e.expected.push_back(ev("tangent", "any point, n=" + std::to_string(n), std::to_string(m * n * n),
                            Source::Literature, "representation space is M_n(k)^m"));
  e.expected.push_back(ev("e2(resolution)", "any point", "0", Source::Immediate));
  return e;
}

CatalogEntry commuting_entry() {
  CatalogEntry e;
  e.name = "commuting";
  e.kind = "presentation";
  e.description = "polynomial ring k[x,y]; Rep^n is the commuting scheme";
  e.presentation = presentation("commuting", 2, {"x1*x2 - x2*x1"});
  e.resolution = koszul_resolution(2);
  e.koszul_vars = 2;
  e.sampler = "commuting";
  const std::string diag = "X=(diag(1,2),diag(3,4))";
  const std::string hand = "row reduction of the 2x2 commutator system";
  e.expected = {
      ev("e0", diag, "2", Source::Oracle, "centralizer of distinct-eigenvalue diagonals"),
      ev("e1", diag, "4", Source::Oracle, hand),
      ev("tangent", diag, "6", Source::Oracle, hand),
      ev("jacobian-rank", diag, "2", Source::Oracle, hand),
      ev("e2(koszul)", diag, "2", Source::Oracle, "cokernel of the commutator map is the diagonal"),
      ev("tangent", "n=1, any point", "2", Source::Oracle, "zero generator gives zero Jacobian"),
      ev("e2(koszul)", "n=1, any point", "1", Source::Oracle, "all differentials vanish for 1x1 matrices"),
      ev("z1", "n=1, any point", "2", Source::Oracle, "all differentials vanish for 1x1 matrices"),
      ev("z2", "n=1, any point", "1", Source::Oracle, "all differentials vanish for 1x1 matrices"),
      ev("tangent", "n=2, X=(0,0)", "8", Source::Oracle, "Jacobian vanishes at the origin"),
  };
  return e;
}

CatalogEntry weyl_entry() {
  CatalogEntry e;
  e.name = "weyl-1";
  e.kind = "presentation";
  e.description = "first Weyl algebra; no finite-dimensional representations";
  e.presentation = presentation("weyl-1", 2, {"x1*x2 - x2*x1 - 1"});
  e.resolution = fox_resolution(*e.presentation);
  e.empty_scheme = true;
  for (int n = 1; n <= 3; ++n)
    e.expected.push_back(ev("unit-certificate", "n=" + std::to_string(n), std::to_string(-n), Source::Oracle,
                            "trace of a commutator vanishes identically"));
  return e;
}

CatalogEntry usl2_entry() {
  CatalogEntry e;
  e.name = "usl2";
  e.kind = "presentation";
  e.description = "universal enveloping algebra of sl2 (x1 = e, x2 = f, x3 = h)";
  e.presentation = presentation("usl2", 3, {"x1*x2 - x2*x1 - x3", "x3*x1 - x1*x3 - 2*x1", "x3*x2 - x2*x3 + 2*x2"});
  e.lie = LieStructure::sl2();
  e.resolution = ce_resolution(*e.lie);
  e.sampler = "sl2-irreps";
  const std::string v2 = "2-dim irrep";
  e.expected = {
      ev("e0", v2, "1", Source::Oracle, "Schur's lemma checked by rank"),
      ev("e1", v2, "0", Source::Literature, "Whitehead's first lemma"),
      ev("tangent", v2, "3", Source::Oracle, "n^2 - e0 + e1"),
      ev("e2(ce)", v2, "0", Source::Literature, "Whitehead's second lemma"),
      ev("z1", v2, "3", Source::Oracle, "rank of the CE bimodule differential"),
      ev("z2", v2, "9", Source::Oracle, "rank of the CE bimodule differential"),
      ev("e2(ce)", "3-dim irrep", "0", Source::Literature, "Whitehead's second lemma"),
      ev("e2(ce)", "4-dim irrep", "0", Source::Literature, "Whitehead's second lemma"),
  };
  return e;
}

FDModel truncated_model(std::uint32_t r) {
  FDModel m{truncated_polynomial(r), {}};
  for (std::uint32_t i = 0; i < r; ++i) m.basis_words.push_back(NCPoly::word(1, NCWord(i, 0)));
  return m;
}

CatalogEntry truncated_entry(const std::string& name, std::uint32_t r) {
  CatalogEntry e;
  e.name = name;
  e.kind = "presentation";
  e.description = "k[x]/(x^" + std::to_string(r) + ")";
  e.presentation = presentation(name, 1, {"x1^" + std::to_string(r)});
  e.resolution = periodic_resolution(r);
  e.fd_model = truncated_model(r);
  e.sampler = "nilpotent-" + std::to_string(r);
  if (r == 2) {
    e.expected = {
        ev("tangent", "n=1, X=0", "1", Source::Oracle, "derivative of x^2 at 0"),
        ev("h2(bar)", "n=1, X=0", "1", Source::Oracle, "cochain enumeration on k[x]/(x^2)"),
        ev("obstruction-order", "n=1, X=0, D=1", "2", Source::Oracle, "t^2 is the first residual"),
    };
  }
  return e;
}

CatalogEntry fd_entry(FDAlgebra a, std::string description, std::vector<NamedModule> modules,
                      std::vector<ExpectedValue> expected) {
  CatalogEntry e;
  e.name = a.name();
  e.kind = "fd-algebra";
  e.description = std::move(description);
  e.algebra = std::move(a);
  e.modules = std::move(modules);
  e.expected = std::move(expected);
  return e;
}

std::vector<ExpectedValue> separable_values() {
  return {ev("h1(bar)", "every bimodule", "0", Source::Literature, "separable algebra"),
          ev("h2(bar)", "every bimodule", "0", Source::Literature, "separable algebra")};
}

using Builder = std::function<CatalogEntry()>;

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"free-1", [] { return free_entry(1); }},
      {"free-2", [] { return free_entry(2); }},
      {"free-3", [] { return free_entry(3); }},
      {"commuting", commuting_entry},
      {"weyl-1", weyl_entry},
      {"usl2", usl2_entry},
      {"fat-point", [] { return truncated_entry("fat-point", 2); }},
      {"trunc-3", [] { return truncated_entry("trunc-3", 3); }},
      {"trunc-4", [] { return truncated_entry("trunc-4", 4); }},
      {"k",
       [] {
         FDAlgebra a = truncated_polynomial(1);
         a.set_name("k");
         return fd_entry(a, "the base field", {{"trivial", {scalar(1)}}},
                         {ev("h1(bar)", "every bimodule", "0", Source::Immediate),
                          ev("h2(bar)", "every bimodule", "0", Source::Immediate)});
       }},
      {"kZ2",
       [] {
         return fd_entry(group_algebra_cyclic(2), "group algebra of Z/2",
                         {{"trivial", power_module(2, scalar(1))}, {"sign", power_module(2, scalar(-1))}},
                         separable_values());
       }},
      {"kZ3",
       [] {
         return fd_entry(group_algebra_cyclic(3), "group algebra of Z/3",
                         {{"trivial", power_module(3, scalar(1))},
                          {"rotation", power_module(3, Mat{{0, -1}, {1, -1}})}},
                         separable_values());
       }},
      {"kS3",
       [] {
         return fd_entry(group_algebra_s3(), "group algebra of S3",
                         {{"trivial", s3_module([](const Perm&) { return scalar(1); })},
                          {"sign", s3_module(perm_sign)},
                          {"standard", s3_module(perm_standard)}},
                         separable_values());
       }},
      {"mat-1", [] { return fd_entry(matrix_algebra(1), "matrix algebra M_1(k)", {{"natural", {scalar(1)}}}, separable_values()); }},
      {"mat-2",
       [] {
         FDAlgebra a = matrix_algebra(2);
         NamedModule nat{"natural", {}};
         for (std::size_t i = 0; i < 4; ++i) {
           Mat m(2, 2);
           m(i / 2, i % 2) = 1;
           nat.action.push_back(m);
         }
         return fd_entry(a, "matrix algebra M_2(k)", {nat}, separable_values());
       }},
      {"mat-3",
       [] {
         FDAlgebra a = matrix_algebra(3);
         NamedModule nat{"natural", {}};
         for (std::size_t i = 0; i < 9; ++i) {
           Mat m(3, 3);
           m(i / 3, i % 3) = 1;
           nat.action.push_back(m);
         }
         return fd_entry(a, "matrix algebra M_3(k)", {nat}, separable_values());
       }},
      {"kx1",
       [] {
         return fd_entry(truncated_polynomial(1), "k[x]/(x)", {{"trivial", {scalar(1)}}},
                         {ev("h2(bar)", "every bimodule", "0", Source::Immediate)});
       }},
      {"kx2",
       [] {
         const FDAlgebra a = truncated_polynomial(2);
         return fd_entry(a, "k[x]/(x^2)", {{"trivial", {scalar(1), scalar(0)}}, {"regular", regular_action(a)}},
                         {ev("h2(bar)", "N=k", "1", Source::Oracle, "cochain enumeration on a 2-dim algebra"),
                          ev("harrison2", "M=k", "1", Source::Oracle, "symmetric cochain linear algebra")});
       }},
      {"kx3",
       [] {
         const FDAlgebra a = truncated_polynomial(3);
         return fd_entry(a, "k[x]/(x^3)",
                         {{"trivial", {scalar(1), scalar(0), scalar(0)}}, {"regular", regular_action(a)}}, {});
       }},
      {"kx4",
       [] {
         const FDAlgebra a = truncated_polynomial(4);
         return fd_entry(a, "k[x]/(x^4)",
                         {{"trivial", {scalar(1), scalar(0), scalar(0), scalar(0)}}, {"regular", regular_action(a)}},
                         {});
       }},
      {"kxk",
       [] {
         return fd_entry(split_product(), "product k x k",
                         {{"first", {scalar(1), scalar(0)}}, {"second", {scalar(0), scalar(1)}}},
                         {ev("harrison2", "M=first factor", "0", Source::Oracle, "separable commutative algebra")});
       }},
      {"path-A2",
       [] {
         return fd_entry(path_algebra_a2(), "path algebra of the A2 quiver",
                         {{"S1", quiver_module(1, 0, {Mat(0, 1)})},
                          {"S2", quiver_module(0, 1, {Mat(1, 0)})},
                          {"P1", quiver_module(1, 1, {Mat{{1}}})}},
                         {ev("h2(bar)", "every bimodule", "0", Source::Literature, "hereditary algebra"),
                          ev("h1(bar)", "N=regular", "0", Source::Oracle, "Happel's formula for path algebras")});
       }},
      {"kronecker",
       [] {
         return fd_entry(path_algebra_kronecker(), "path algebra of the Kronecker quiver",
                         {{"S1", quiver_module(1, 0, {Mat(0, 1), Mat(0, 1)})},
                          {"S2", quiver_module(0, 1, {Mat(1, 0), Mat(1, 0)})},
                          {"R11", quiver_module(1, 1, {Mat{{1}}, Mat{{0}}})},
                          {"R12", quiver_module(1, 2, {Mat{{1}, {0}}, Mat{{0}, {1}}})}},
                         {ev("h2(bar)", "every bimodule", "0", Source::Literature, "hereditary algebra"),
                          ev("h1(bar)", "N=regular", "3", Source::Oracle, "Happel's formula for path algebras")});
       }},
      {"sl2",
       [] {
         CatalogEntry e;
         e.name = "sl2";
         e.kind = "lie";
         e.description = "sl2 with basis e, f, h";
         e.lie = LieStructure::sl2();
         for (int d = 2; d <= 4; ++d) {
           e.expected.push_back(ev("h1(ce)", std::to_string(d) + "-dim irrep", "0", Source::Literature,
                                   "Whitehead's first lemma"));
           e.expected.push_back(ev("h2(ce)", std::to_string(d) + "-dim irrep", "0", Source::Literature,
                                   "Whitehead's second lemma"));
         }
         return e;
       }},
      {"abelian-1",
       [] {
         CatalogEntry e;
         e.name = "abelian-1";
         e.kind = "lie";
         e.description = "one-dimensional abelian Lie algebra";
         e.lie = LieStructure::abelian(1);
         e.expected.push_back(ev("h2(ce)", "trivial module", "0", Source::Oracle, "second exterior power is zero"));
         return e;
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, b] : builders()) out.push_back(name);
  return out;
}

void validate_entry(const CatalogEntry& e) {
  for (const auto& v : e.expected)
    if (v.source == Source::Oracle && v.oracle.empty())
      throw ValidationError(e.name + ": expected value '" + v.quantity + "' lacks an oracle name");
  if (e.algebra) {
    e.algebra->validate();
    for (const auto& m : e.modules)
      if (!is_left_module(*e.algebra, m.action)) throw ValidationError(e.name + ": module '" + m.name + "' is invalid");
  }
  if (e.lie) e.lie->validate();
  if (e.presentation) {
    e.presentation->validate();
    if (e.lie) {
      if (e.lie->dim != e.presentation->m) throw ValidationError(e.name + ": Lie dimension differs from generator count");
    }
    if (e.sampler) {
      PointSampler s = sampler_by_name(*e.sampler);
      Rng rng(20240611);
      for (std::uint32_t n : s.dims) {
        if (n > 2) continue;
        std::string family;
        std::vector<RepPoint> pts{s.generic(rng, n, family)};
        for (auto& [f, p] : s.special(n)) pts.push_back(p);
        for (const auto& p : pts) {
          if (!is_point(*e.presentation, p)) throw ValidationError(e.name + ": sampler produced a point off the scheme");
          if (e.lie) validate_representation(*e.lie, p.span());
          if (e.resolution) validate_at(*e.resolution, p);
          if (e.fd_model) {
            std::vector<Mat> rho;
            for (const auto& w : e.fd_model->basis_words) rho.push_back(evaluate(w, p.span()));
            if (!is_left_module(e.fd_model->algebra, rho))
              throw ValidationError(e.name + ": finite-dimensional model disagrees with a sampled point");
          }
        }
      }
    }
  }
}

Bimodule random_bimodule(const FDAlgebra& b, const std::vector<NamedModule>& modules, Rng& rng,
                         std::string* description) {
  if (modules.empty()) throw ValidationError(b.name() + ": no modules to build bimodules from");
  std::uniform_int_distribution<std::size_t> pick(0, modules.size() - 1);
  const NamedModule& left = modules[pick(rng)];
  const NamedModule& right = modules[pick(rng)];
  Bimodule n = Bimodule::tensor(left.action, right.action);
  const std::size_t d = n.dim;
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Mat p(d, d);
  std::uniform_int_distribution<int> scale(1, 3);
  for (std::size_t i = 0; i < d; ++i) p(i, perm[i]) = Rational(rng() % 2 ? scale(rng) : -scale(rng));
  if (d >= 2) {
    Mat el = Mat::identity(d);
    const std::size_t i = rng() % d;
    const std::size_t j = (i + 1 + rng() % (d - 1)) % d;
    el(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
    p = p * el;
  }
  const auto p_inv = inverse(p);
  n = n.conjugated(p, *p_inv);
  n.validate(b);
  if (description) *description = left.name + " (x) " + right.name;
  return n;
}

CatalogEntry load(const std::string& name) {
  for (const auto& [n, build] : builders())
    if (n == name) {
      CatalogEntry e = build();
      validate_entry(e);
      return e;
    }
  throw UnknownEntry("no catalog entry named '" + name + "'");
}

}  // namespace repsmooth
