#include "repsmooth/cohomology.hpp"

#include <cstdlib>
#include <map>

#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"
#include "repsmooth/repscheme.hpp"
#include "repsmooth/sparse.hpp"

namespace repsmooth {

Mat centralizer_map(const RepPoint& x) { return hom_d0(x); }

Mat derivation_constraints(const AlgebraPresentation& a, const RepPoint& x) {
  const std::size_t n = x.n();
  const std::size_t nn = n * n;
  Mat out(a.relations.size() * nn, a.m * nn);
  for (std::size_t r = 0; r < a.relations.size(); ++r)
    for (const auto& [w, c] : a.relations[r].terms())
      for (std::size_t p = 0; p < w.size(); ++p) {
        // X(prefix) E_ij X(suffix) has (s, t) entry P(s, i) S(j, t).
        const Mat pre = evaluate_word(NCWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p)), x.span());
        const Mat suf = evaluate_word(NCWord(w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end()), x.span());
        const std::size_t l = w[p];
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t s = 0; s < n; ++s) {
            if (sgn(pre(s, i)) == 0) continue;
            const Rational cp = c * pre(s, i);
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t t = 0; t < n; ++t)
                if (sgn(suf(j, t)) != 0) out(r * nn + s * n + t, l * nn + i * n + j) += cp * suf(j, t);
          }
      }
  return out;
}

Subspace ext0(const AlgebraPresentation& a, const RepPoint& x) {
  require_point(a, x);
  auto basis = nullspace(centralizer_map(x));
  return {basis.size(), std::move(basis)};
}

Subspace derivation_space(const AlgebraPresentation& a, const RepPoint& x) {
  require_point(a, x);
  auto basis = nullspace(derivation_constraints(a, x));
  return {basis.size(), std::move(basis)};
}

std::size_t tangent_dim_via_derivations(const AlgebraPresentation& a, const RepPoint& x) {
  require_point(a, x);
  const Mat c = derivation_constraints(a, x);
  return c.cols() - rank(c);
}

std::size_t ext1(const AlgebraPresentation& a, const RepPoint& x) {
  const std::size_t der = tangent_dim_via_derivations(a, x);
  const std::size_t nn = x.n() * x.n();
  const std::size_t e0 = nn - rank(centralizer_map(x));
  return der - (nn - e0);
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::Bar: return "bar";
    case Backend::Koszul: return "koszul";
    case Backend::CE: return "ce";
    case Backend::Resolution: return "resolution";
  }
  return "resolution";
}

Backend parse_backend(const std::string& s) {
  if (s == "bar") return Backend::Bar;
  if (s == "koszul") return Backend::Koszul;
  if (s == "ce") return Backend::CE;
  if (s == "resolution") return Backend::Resolution;
  throw ParseError("unknown backend '" + s + "'");
}

std::size_t default_bar_budget() {
  if (const char* env = std::getenv("REPSMOOTH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

namespace {

using SparseCol = std::map<std::uint32_t, Rational>;

SparseRow to_row(const SparseCol& c) {
  SparseRow r;
  for (const auto& [k, v] : c)
    if (sgn(v) != 0) r.emplace_back(k, v);
  return r;
}

struct BarRanks {
  std::size_t dims[3] = {0, 0, 0};  // C^0, C^1, C^2
  std::size_t r[3] = {0, 0, 0};     // ranks of delta_0, delta_1, delta_2
  std::vector<Vec> e0_basis;
};

BarRanks bar_ranks(const FDAlgebra& b_in, const Bimodule& n_in, std::size_t upto, std::size_t budget) {
  b_in.validate();
  n_in.validate(b_in);
  if (budget == 0) budget = default_bar_budget();
  const std::size_t d = b_in.dim();
  const std::size_t p = n_in.dim;
  if (d * d * d * p > budget)
    throw BudgetExceeded("bar complex needs dim(B)^3 dim(N) = " + std::to_string(d * d * d * p) +
                         " entries, budget is " + std::to_string(budget));
  const UnitFirstBasis ub = unit_first(b_in);
  const FDAlgebra& b = ub.algebra;
  const Bimodule n = ub.transform(n_in);
  const std::size_t db = d - 1;
  // Basis index a in 0..db-1 stands for the new basis vector a + 1.
  auto cf = [&](std::size_t a, std::size_t bb, std::size_t x) -> const Rational& { return b.c(a + 1, bb + 1, x + 1); };
  BarRanks out;
  out.dims[0] = p;
  out.dims[1] = db * p;
  out.dims[2] = db * db * p;

  {
    Mat d0(db * p, p);
    for (std::size_t a = 0; a < db; ++a)
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t q = 0; q < p; ++q) d0(a * p + i, q) = n.left[a + 1](i, q) - n.right[a + 1](i, q);
    out.e0_basis = nullspace(d0);
    out.r[0] = p - out.e0_basis.size();
  }
  if (upto >= 1) {
    std::vector<SparseRow> cols;
    for (std::size_t x = 0; x < db; ++x)
      for (std::size_t q = 0; q < p; ++q) {
        SparseCol col;
        auto idx = [&](std::size_t a, std::size_t bb, std::size_t i) {
          return static_cast<std::uint32_t>((a * db + bb) * p + i);
        };
        for (std::size_t a = 0; a < db; ++a)
          for (std::size_t i = 0; i < p; ++i) {
            if (sgn(n.left[a + 1](i, q)) != 0) col[idx(a, x, i)] += n.left[a + 1](i, q);
            if (sgn(n.right[a + 1](i, q)) != 0) col[idx(x, a, i)] += n.right[a + 1](i, q);
          }
        for (std::size_t a = 0; a < db; ++a)
          for (std::size_t bb = 0; bb < db; ++bb)
            if (sgn(cf(a, bb, x)) != 0) col[idx(a, bb, q)] -= cf(a, bb, x);
        cols.push_back(to_row(col));
      }
    out.r[1] = sparse_rank(db * db * p, std::move(cols));
  }
  if (upto >= 2) {
    std::vector<SparseRow> cols;
    auto idx = [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t i) {
      return static_cast<std::uint32_t>(((a * db + bb) * db + c) * p + i);
    };
    for (std::size_t x = 0; x < db; ++x)
      for (std::size_t y = 0; y < db; ++y)
        for (std::size_t q = 0; q < p; ++q) {
          SparseCol col;
          for (std::size_t a = 0; a < db; ++a)
            for (std::size_t i = 0; i < p; ++i) {
              if (sgn(n.left[a + 1](i, q)) != 0) col[idx(a, x, y, i)] += n.left[a + 1](i, q);
              if (sgn(n.right[a + 1](i, q)) != 0) col[idx(x, y, a, i)] -= n.right[a + 1](i, q);
            }
          for (std::size_t a = 0; a < db; ++a)
            for (std::size_t bb = 0; bb < db; ++bb) {
              if (sgn(cf(a, bb, x)) != 0) col[idx(a, bb, y, q)] -= cf(a, bb, x);
              if (sgn(cf(a, bb, y)) != 0) col[idx(x, a, bb, q)] += cf(a, bb, y);
            }
          cols.push_back(to_row(col));
        }
    out.r[2] = sparse_rank(db * db * db * p, std::move(cols));
  }
  return out;
}

// Vectors from `kernel` completing a basis of span(image) + span(kernel) over span(image).
std::vector<Vec> quotient_representatives(const Mat& image_map, const std::vector<Vec>& kernel) {
  SparseRowSpace space(image_map.rows());
  for (const auto& c : column_space(image_map)) space.insert(sparse_row(c));
  std::vector<Vec> reps;
  for (const auto& v : kernel)
    if (space.insert(sparse_row(v))) reps.push_back(v);
  return reps;
}

}  // namespace

std::size_t h_bar(const FDAlgebra& b, const Bimodule& n, std::size_t degree, std::size_t budget) {
  if (degree > 2) throw DimensionMismatch("bar complex is implemented in degrees 0..2");
  const BarRanks r = bar_ranks(b, n, degree, budget);
  if (degree == 0) return r.dims[0] - r.r[0];
  return r.dims[degree] - r.r[degree] - r.r[degree - 1];
}

CohomologyReport bar_report(const FDAlgebra& b, const Bimodule& n, std::size_t budget) {
  const BarRanks r = bar_ranks(b, n, 2, budget);
  CohomologyReport out;
  out.backend = Backend::Bar;
  out.e0 = r.dims[0] - r.r[0];
  out.e1 = r.dims[1] - r.r[1] - r.r[0];
  out.e2 = r.dims[2] - r.r[2] - r.r[1];
  out.e0_basis = r.e0_basis;
  return out;
}

Mat koszul_differential(const RepPoint& x, std::size_t p) {
  return ce_differential(LieStructure::abelian(x.m()), x.span(), p);
}

namespace {

void require_commuting(const RepPoint& x) {
  for (std::size_t i = 0; i < x.m(); ++i)
    for (std::size_t j = i + 1; j < x.m(); ++j)
      if (!commutator(x[i], x[j]).is_zero())
        throw NotOnScheme("matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
}

CohomologyReport complex_report(Backend tag, const LieStructure& g, const RepPoint& x) {
  const std::size_t nn = x.n() * x.n();
  const std::size_t c1 = g.dim * nn;
  const Mat d0 = ce_differential(g, x.span(), 0);
  const Mat d1 = ce_differential(g, x.span(), 1);
  const Mat d2 = ce_differential(g, x.span(), 2);
  CohomologyReport out;
  out.backend = tag;
  out.e0_basis = nullspace(d0);
  out.e0 = out.e0_basis.size();
  const std::size_t r0 = nn - out.e0;
  const std::size_t r1 = rank(d1);
  const auto k2 = nullspace(d2);
  out.z1 = c1 - r1;
  out.z2 = k2.size();
  out.e1 = *out.z1 - r0;
  out.e2 = *out.z2 - r1;
  out.e2_representatives = quotient_representatives(d1, k2);
  return out;
}

}  // namespace

std::size_t ext2_koszul(std::size_t g, const RepPoint& x) {
  if (x.m() != g) throw DimensionMismatch("point must have one matrix per polynomial variable");
  return *koszul_report(x).e2;
}

CohomologyReport koszul_report(const RepPoint& x) {
  require_commuting(x);
  return complex_report(Backend::Koszul, LieStructure::abelian(x.m()), x);
}

CohomologyReport ce_report(const LieStructure& g, const RepPoint& x) {
  g.validate();
  validate_representation(g, x.span());
  return complex_report(Backend::CE, g, x);
}

CohomologyReport ext2_resolution(const BimoduleResolution& r, const AlgebraPresentation& a, const RepPoint& x) {
  require_point(a, x);
  validate_at(r, x);
  const std::size_t nn = x.n() * x.n();
  const Mat d0 = hom_d0(x);
  const Mat d1 = evaluate_hom(r.d1, x);
  CohomologyReport out;
  out.backend = Backend::Resolution;
  out.e0_basis = nullspace(d0);
  out.e0 = out.e0_basis.size();
  const std::size_t r0 = nn - out.e0;
  const std::size_t r1 = rank(d1);
  out.z1 = r.m * nn - r1;
  out.e1 = *out.z1 - r0;
  if (r.d2) {
    const Mat d2 = evaluate_hom(*r.d2, x);
    const auto k2 = nullspace(d2);
    out.z2 = k2.size();
    out.e2 = *out.z2 - r1;
    out.e2_representatives = quotient_representatives(d1, k2);
  }
  return out;
}

}  // namespace repsmooth
