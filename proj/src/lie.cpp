#include "repsmooth/lie.hpp"

#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"
#include "repsmooth/ncpoly.hpp"

namespace repsmooth {

Vec LieStructure::bracket(std::size_t i, std::size_t j) const {
  Vec v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = at(i, j, k);
  return v;
}

void LieStructure::validate() const {
  if (c.size() != dim * dim * dim) throw ValidationError(name + ": structure constant table has wrong size");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (at(i, j, k) != -at(j, i, k))
          throw ValidationError(name + ": bracket is not antisymmetric on (" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ")");
  // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
  auto br = [&](const Vec& u, std::size_t j) {
    Vec out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn(u[i]) == 0) continue;
      for (std::size_t k = 0; k < dim; ++k) out[k] += u[i] * at(i, j, k);
    }
    return out;
  };
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t cc = 0; cc < dim; ++cc) {
        Vec s = br(bracket(a, b), cc);
        const Vec t = br(bracket(b, cc), a);
        const Vec u = br(bracket(cc, a), b);
        for (std::size_t k = 0; k < dim; ++k) s[k] += t[k] + u[k];
        if (!is_zero(s))
          throw ValidationError(name + ": Jacobi identity fails on (" + std::to_string(a + 1) + ", " +
                                std::to_string(b + 1) + ", " + std::to_string(cc + 1) + ")");
      }
}

std::vector<std::string> LieStructure::enveloping_relations() const {
  const auto m = static_cast<std::uint32_t>(dim);
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = i + 1; j < m; ++j) {
      NCPoly r = NCPoly::word(m, {i, j}) - NCPoly::word(m, {j, i});
      for (std::uint32_t k = 0; k < m; ++k) r.add_term({k}, -at(i, j, k));
      out.push_back(to_string(r));
    }
  return out;
}

LieStructure LieStructure::sl2() {
  LieStructure g("sl2", 3);
  // e = 0, f = 1, h = 2
  g.at(0, 1, 2) = 1;
  g.at(1, 0, 2) = -1;
  g.at(2, 0, 0) = 2;
  g.at(0, 2, 0) = -2;
  g.at(2, 1, 1) = -2;
  g.at(1, 2, 1) = 2;
  return g;
}

LieStructure LieStructure::abelian(std::size_t dim) { return LieStructure("abelian-" + std::to_string(dim), dim); }

void validate_representation(const LieStructure& g, std::span<const Mat> rho) {
  if (rho.size() != g.dim) throw ValidationError("representation needs one matrix per Lie basis element");
  const std::size_t n = rho.front().rows();
  for (const auto& r : rho)
    if (r.rows() != n || r.cols() != n) throw ValidationError("representation matrices must all be n x n");
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j) {
      Mat image(n, n);
      for (std::size_t k = 0; k < g.dim; ++k)
        if (sgn(g.at(i, j, k)) != 0) image += rho[k] * g.at(i, j, k);
      if (commutator(rho[i], rho[j]) != image)
        throw ValidationError("rho does not respect the bracket on (" + std::to_string(i + 1) + ", " +
                              std::to_string(j + 1) + ")");
    }
}

std::vector<Mat> sl2_irrep(std::size_t d) {
  Mat e(d, d), f(d, d), h(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    h(k, k) = Rational(static_cast<long>(d) - 1 - 2 * static_cast<long>(k));
    if (k + 1 < d) f(k + 1, k) = 1;
    if (k > 0) e(k - 1, k) = Rational(static_cast<long>(k * (d - k)));
  }
  return {e, f, h};
}

std::vector<std::vector<std::size_t>> combinations(std::size_t d, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < d; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

std::size_t index_of(const std::vector<std::vector<std::size_t>>& combos, const std::vector<std::size_t>& s) {
  for (std::size_t k = 0; k < combos.size(); ++k)
    if (combos[k] == s) return k;
  throw std::logic_error("subset not found");
}

void add_block(Mat& m, std::size_t r0, std::size_t c0, const Mat& block, const Rational& s) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      if (sgn(block(i, j)) != 0) m(r0 + i, c0 + j) += s * block(i, j);
}

}  // namespace

Mat ce_differential(const LieStructure& g, std::span<const Mat> rho, std::size_t p) {
  const std::size_t n = rho.front().rows();
  const std::size_t nn = n * n;
  const auto src = combinations(g.dim, p);
  const auto dst = combinations(g.dim, p + 1);
  Mat d(dst.size() * nn, src.size() * nn);
  const Mat id = Mat::identity(n);
  const Mat idnn = Mat::identity(nn);
  for (std::size_t t = 0; t < dst.size(); ++t) {
    const auto& T = dst[t];
    for (std::size_t i = 0; i < T.size(); ++i) {
      std::vector<std::size_t> rest = T;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      const Mat ad = kron(rho[T[i]], id) - kron(id, rho[T[i]].transpose());
      add_block(d, t * nn, index_of(src, rest) * nn, ad, i % 2 == 0 ? 1 : -1);
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
          add_block(d, t * nn, index_of(src, s) * nn, idnn, outer * ck * sign);
        }
      }
  }
  return d;
}

CEReport ce_cohomology(const LieStructure& g, std::span<const Mat> rho) {
  g.validate();
  validate_representation(g, rho);
  const std::size_t nn = rho.front().rows() * rho.front().rows();
  std::size_t r[3] = {0, 0, 0};
  std::size_t dims[3];
  for (std::size_t p = 0; p < 3; ++p) {
    dims[p] = combinations(g.dim, p).size() * nn;
    if (p + 1 <= g.dim) r[p] = rank(ce_differential(g, rho, p));
  }
  CEReport out;
  out.h0 = dims[0] - r[0];
  out.h1 = dims[1] - r[1] - r[0];
  out.h2 = dims[2] - r[2] - r[1];
  return out;
}

std::size_t ext2_ce(const LieStructure& g, std::span<const Mat> rho) { return ce_cohomology(g, rho).h2; }

}  // namespace repsmooth
