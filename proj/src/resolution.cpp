#include "repsmooth/resolution.hpp"

#include "repsmooth/error.hpp"

namespace repsmooth {

std::optional<std::size_t> BimoduleResolution::f2() const {
  if (!d2) return std::nullopt;
  return d2->source_rank;
}

BimoduleResolution fox_resolution(const AlgebraPresentation& a) {
  BimoduleResolution r;
  r.name = a.name + "-fox";
  r.m = a.m;
  r.f1 = a.relations.size();
  r.d1 = BimoduleMap(r.f1, a.m);
  for (std::size_t k = 0; k < a.relations.size(); ++k)
    for (const auto& [w, c] : a.relations[k].terms())
      for (std::size_t p = 0; p < w.size(); ++p)
        r.d1.at(k, w[p]).push_back({c, NCWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p)),
                                    NCWord(w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end())});
  if (a.relations.empty()) r.d2 = BimoduleMap(0, 0);
  return r;
}

BimoduleResolution koszul_resolution(std::uint32_t g) {
  // Same construction as the CE resolution of the abelian Lie algebra, cut
  // at the length of the Koszul complex.
  BimoduleResolution r = ce_resolution(LieStructure::abelian(g));
  r.name = "koszul-" + std::to_string(g);
  return r;
}

namespace {

// Boundary of 1 (x) x_T (x) 1 in U (x) L^{p-1} (x) U, as a row of d.
void ce_boundary(const LieStructure& g, const std::vector<std::vector<std::size_t>>& src_combos,
                 const std::vector<std::vector<std::size_t>>& dst_combos, BimoduleMap& d) {
  auto index_of = [&](const std::vector<std::size_t>& s) {
    for (std::size_t k = 0; k < dst_combos.size(); ++k)
      if (dst_combos[k] == s) return k;
    throw std::logic_error("subset not found");
  };
  for (std::size_t t = 0; t < src_combos.size(); ++t) {
    const auto& T = src_combos[t];
    for (std::size_t i = 0; i < T.size(); ++i) {
      std::vector<std::size_t> rest = T;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      const Rational sign = i % 2 == 0 ? 1 : -1;  // (-1)^{i+1} with 1-based i
      const auto x = static_cast<std::uint32_t>(T[i]);
      auto& cell = d.at(t, index_of(rest));
      cell.push_back({sign, {x}, {}});
      cell.push_back({-sign, {}, {x}});
    }
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = i + 1; j < T.size(); ++j) {
        std::vector<std::size_t> rest;
        for (std::size_t q = 0; q < T.size(); ++q)
          if (q != i && q != j) rest.push_back(T[q]);
        const Rational outer = (i + j) % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < g.dim; ++k) {
          const Rational& ck = g.at(T[i], T[j], k);
          if (sgn(ck) == 0) continue;
          bool repeated = false;
          std::size_t pos = 0;
          for (auto r : rest) {
            if (r == k) repeated = true;
            if (r < k) ++pos;
          }
          if (repeated) continue;
          std::vector<std::size_t> s = rest;
          s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), k);
          const Rational sign = pos % 2 == 0 ? 1 : -1;
          d.at(t, index_of(s)).push_back({outer * ck * sign, {}, {}});
        }
      }
  }
}

}  // namespace

BimoduleResolution ce_resolution(const LieStructure& g) {
  g.validate();
  BimoduleResolution r;
  r.name = g.name + "-ce";
  r.m = static_cast<std::uint32_t>(g.dim);
  const auto c1 = combinations(g.dim, 1);
  const auto c2 = combinations(g.dim, 2);
  const auto c3 = combinations(g.dim, 3);
  r.f1 = c2.size();
  r.d1 = BimoduleMap(c2.size(), c1.size());
  ce_boundary(g, c2, c1, r.d1);
  BimoduleMap d2(c3.size(), c2.size());
  ce_boundary(g, c3, c2, d2);
  r.d2 = std::move(d2);
  return r;
}

BimoduleResolution periodic_resolution(std::uint32_t power) {
  BimoduleResolution r;
  r.name = "periodic-" + std::to_string(power);
  r.m = 1;
  r.f1 = 1;
  r.d1 = BimoduleMap(1, 1);
  for (std::uint32_t i = 0; i < power; ++i)
    r.d1.at(0, 0).push_back({1, NCWord(i, 0), NCWord(power - 1 - i, 0)});
  BimoduleMap d2(1, 1);
  d2.at(0, 0).push_back({1, {0}, {}});
  d2.at(0, 0).push_back({-1, {}, {0}});
  r.d2 = std::move(d2);
  return r;
}

Mat evaluate_hom(const BimoduleMap& map, const RepPoint& x) {
  const std::size_t n = x.n();
  const std::size_t nn = n * n;
  Mat out(map.source_rank * nn, map.target_rank * nn);
  for (std::size_t r = 0; r < map.source_rank; ++r)
    for (std::size_t s = 0; s < map.target_rank; ++s)
      for (const auto& t : map.at(r, s)) {
        for (auto l : t.left)
          if (l >= x.m()) throw DimensionMismatch("bimodule term uses a generator outside the point");
        for (auto l : t.right)
          if (l >= x.m()) throw DimensionMismatch("bimodule term uses a generator outside the point");
        const Mat block = kron(evaluate_word(t.left, x.span()), evaluate_word(t.right, x.span()).transpose());
        for (std::size_t i = 0; i < nn; ++i)
          for (std::size_t j = 0; j < nn; ++j)
            if (sgn(block(i, j)) != 0) out(r * nn + i, s * nn + j) += t.coeff * block(i, j);
      }
  return out;
}

Mat hom_d0(const RepPoint& x) {
  const std::size_t n = x.n();
  const std::size_t nn = n * n;
  const Mat id = Mat::identity(n);
  Mat out(x.m() * nn, nn);
  for (std::size_t l = 0; l < x.m(); ++l) {
    const Mat ad = kron(x[l], id) - kron(id, x[l].transpose());
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j) out(l * nn + i, j) = ad(i, j);
  }
  return out;
}

void validate_at(const BimoduleResolution& r, const RepPoint& x) {
  if (x.m() != r.m) throw ValidationError(r.name + ": point has the wrong number of matrices");
  if (r.d1.target_rank != r.m || r.d1.source_rank != r.f1)
    throw ValidationError(r.name + ": d1 has the wrong shape");
  const Mat d0 = hom_d0(x);
  const Mat d1 = evaluate_hom(r.d1, x);
  if (!(d1 * d0).is_zero()) throw ValidationError(r.name + ": d1 d0 does not vanish at the point");
  if (r.d2) {
    if (r.d2->target_rank != r.f1) throw ValidationError(r.name + ": d2 has the wrong shape");
    const Mat d2 = evaluate_hom(*r.d2, x);
    if (!(d2 * d1).is_zero()) throw ValidationError(r.name + ": d2 d1 does not vanish at the point");
  }
}

}  // namespace repsmooth
