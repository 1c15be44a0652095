#include "repsmooth/cocycle.hpp"

#include <map>
#include <stdexcept>

#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"
#include "repsmooth/sparse.hpp"

namespace repsmooth {

namespace {

void axpy(Vec& y, const Rational& a, std::span<const Rational> x) {
  if (sgn(a) == 0) return;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (sgn(x[k]) != 0) y[k] += a * x[k];
}

Vec sub(Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

void put_block(Mat& m, std::size_t r0, std::size_t c0, const Mat& block, const Rational& s = 1) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      if (sgn(block(i, j)) != 0) m(r0 + i, c0 + j) += s * block(i, j);
}

}  // namespace

TwoCochain TwoCochain::zero(const FDAlgebra& b, const Bimodule& m) {
  TwoCochain w{b, m, std::vector<Vec>(b.dim() * b.dim(), Vec(m.dim))};
  return w;
}

Vec TwoCochain::operator()(std::span<const Rational> a, std::span<const Rational> b) const {
  Vec out(coeffs.dim);
  for (std::size_t i = 0; i < base.dim(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < base.dim(); ++j)
      if (sgn(b[j]) != 0) axpy(out, a[i] * b[j], at(i, j));
  }
  return out;
}

TwoCochain& TwoCochain::operator-=(const TwoCochain& o) {
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = sub(values[k], o.values[k]);
  return *this;
}

TwoCochain& TwoCochain::operator+=(const TwoCochain& o) {
  for (std::size_t k = 0; k < values.size(); ++k) axpy(values[k], 1, o.values[k]);
  return *this;
}

bool is_cocycle(const TwoCochain& w) {
  const FDAlgebra& b = w.base;
  const std::size_t d = b.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t bb = 0; bb < d; ++bb) {
      const Vec ab = b.basis_product(a, bb);
      for (std::size_t c = 0; c < d; ++c) {
        Vec s = w.coeffs.left[a] * w.at(bb, c);
        s = sub(s, w(ab, b.basis(c)));
        axpy(s, 1, w(b.basis(a), b.basis_product(bb, c)));
        s = sub(s, w.coeffs.right[c] * w.at(a, bb));
        if (!is_zero(s)) return false;
      }
    }
  return true;
}

bool is_symmetric(const TwoCochain& w) {
  const std::size_t d = w.base.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (w.at(i, j) != w.at(j, i)) return false;
  return true;
}

TwoCochain coboundary(const FDAlgebra& b, const Bimodule& m, const Mat& h) {
  if (h.rows() != m.dim || h.cols() != b.dim()) throw DimensionMismatch("h must be dim M x dim B");
  TwoCochain w = TwoCochain::zero(b, m);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vec v = m.left[i] * h.col(j);
      v = sub(v, h * b.basis_product(i, j));
      axpy(v, 1, m.right[j] * h.col(i));
      w.at(i, j) = std::move(v);
    }
  return w;
}

std::optional<Mat> coboundary_witness(const TwoCochain& w) {
  if (!is_cocycle(w)) throw ValidationError("input is not a Hochschild 2-cocycle");
  const std::size_t d = w.base.dim();
  const std::size_t p = w.coeffs.dim;
  const UnitFirstBasis ub = unit_first(w.base);
  const FDAlgebra& b = ub.algebra;
  const Bimodule m = ub.transform(w.coeffs);
  std::vector<Vec> nb(d);
  for (std::size_t i = 0; i < d; ++i) nb[i] = ub.to_old.col(i);
  // omega in the unit-first basis, minus delta h0 with h0(1) = omega(1, 1).
  Mat h0(p, d);
  const Vec m0 = w(nb[0], nb[0]);
  for (std::size_t q = 0; q < p; ++q) h0(q, 0) = m0[q];
  const TwoCochain dh0 = coboundary(b, m, h0);
  const std::size_t db = d - 1;
  Mat sys(db * db * p, db * p);
  Vec rhs(db * db * p);
  for (std::size_t a = 1; a < d; ++a)
    for (std::size_t c = 1; c < d; ++c) {
      const std::size_t row = ((a - 1) * db + (c - 1)) * p;
      const Vec target = sub(w(nb[a], nb[c]), dh0.at(a, c));
      for (std::size_t q = 0; q < p; ++q) rhs[row + q] = target[q];
      put_block(sys, row, (c - 1) * p, m.left[a]);
      put_block(sys, row, (a - 1) * p, m.right[c]);
      for (std::size_t k = 1; k < d; ++k)
        if (sgn(b.c(a, c, k)) != 0) put_block(sys, row, (k - 1) * p, Mat::identity(p), -b.c(a, c, k));
    }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Mat h_new = h0;
  for (std::size_t k = 1; k < d; ++k)
    for (std::size_t q = 0; q < p; ++q) h_new(q, k) = (*sol)[(k - 1) * p + q];
  Mat h = h_new * ub.to_new;
  if (!(coboundary(w.base, w.coeffs, h) == w)) throw std::logic_error("coboundary witness failed verification");
  return h;
}

void HochschildExtension::validate() const {
  const std::size_t d = base.dim(), p = coeffs.dim, de = total.dim();
  if (de != d + p) throw ValidationError("extension has the wrong dimension");
  total.validate();
  if (this->p * sigma != Mat::identity(d)) throw ValidationError("p sigma is not the identity");
  if (!(this->p * i).is_zero()) throw ValidationError("p i is not zero");
  if (rank(i) != p) throw ValidationError("i is not injective");
  for (std::size_t x = 0; x < de; ++x)
    for (std::size_t y = 0; y < de; ++y)
      if (this->p * total.basis_product(x, y) != base.mul(this->p.col(x), this->p.col(y)))
        throw ValidationError("p is not multiplicative");
  if (this->p * total.unit() != base.unit()) throw ValidationError("p is not unital");
  for (std::size_t q = 0; q < p; ++q)
    for (std::size_t r = 0; r < p; ++r)
      if (!is_zero(total.mul(i.col(q), i.col(r)))) throw ValidationError("kernel of p does not square to zero");
  for (std::size_t bb = 0; bb < d; ++bb)
    for (std::size_t q = 0; q < p; ++q) {
      if (i * coeffs.left[bb].col(q) != total.mul(sigma.col(bb), i.col(q)))
        throw ValidationError("i does not intertwine the left action");
      if (i * coeffs.right[bb].col(q) != total.mul(i.col(q), sigma.col(bb)))
        throw ValidationError("i does not intertwine the right action");
    }
}

HochschildExtension build_extension(const TwoCochain& w) {
  if (!is_cocycle(w)) throw ValidationError("cocycle identity fails; the extension would not be associative");
  const FDAlgebra& b = w.base;
  const Bimodule& m = w.coeffs;
  const std::size_t d = b.dim(), p = m.dim;
  HochschildExtension e;
  e.base = b;
  e.coeffs = m;
  e.total = FDAlgebra(b.name() + "+w", d + p);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) e.total.c(i, j, k) = b.c(i, j, k);
      for (std::size_t q = 0; q < p; ++q) e.total.c(i, j, d + q) = -w.at(i, j)[q];
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t q = 0; q < p; ++q)
      for (std::size_t r = 0; r < p; ++r) {
        e.total.c(i, d + q, d + r) = m.left[i](r, q);
        e.total.c(d + q, i, d + r) = m.right[i](r, q);
      }
  Vec unit(d + p);
  for (std::size_t k = 0; k < d; ++k) unit[k] = b.unit()[k];
  const Vec w11 = w(b.unit(), b.unit());
  for (std::size_t q = 0; q < p; ++q) unit[d + q] = w11[q];
  e.total.set_unit(unit);
  std::vector<std::string> labels = b.labels();
  for (std::size_t q = 0; q < p; ++q) labels.push_back("m" + std::to_string(q + 1));
  e.total.set_labels(labels);
  e.p = Mat(d, d + p);
  e.i = Mat(d + p, p);
  e.sigma = Mat(d + p, d);
  for (std::size_t k = 0; k < d; ++k) {
    e.p(k, k) = 1;
    e.sigma(k, k) = 1;
  }
  for (std::size_t q = 0; q < p; ++q) e.i(d + q, q) = 1;
  e.validate();
  return e;
}

TwoCochain classify_extension(const HochschildExtension& e) {
  e.validate();
  const std::size_t d = e.base.dim();
  TwoCochain w = TwoCochain::zero(e.base, e.coeffs);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vec theta = sub(e.sigma * e.base.basis_product(a, b), e.total.mul(e.sigma.col(a), e.sigma.col(b)));
      auto x = solve(e.i, theta);
      if (!x) throw ValidationError("sigma(ab) - sigma(a) sigma(b) is not in the image of i");
      w.at(a, b) = std::move(*x);
    }
  return w;
}

HochschildExtension with_section(const HochschildExtension& e, const Mat& h) {
  HochschildExtension out = e;
  out.sigma = e.sigma + e.i * h;
  out.validate();
  return out;
}

std::optional<Mat> find_equivalence(const HochschildExtension& e, const HochschildExtension& e2) {
  e.validate();
  e2.validate();
  const std::size_t d = e.base.dim(), p = e.coeffs.dim, de = e.total.dim();
  if (e2.base.dim() != d || e2.coeffs.dim != p) throw DimensionMismatch("extensions of different shapes");
  // Coordinates of E along sigma(B) (+) i(M); Pi reads the M part.
  Mat t(de, de);
  put_block(t, 0, 0, e.sigma);
  put_block(t, 0, d, e.i);
  const auto t_inv = inverse(t);
  if (!t_inv) throw ValidationError("sigma(B) and i(M) do not span the extension");
  Mat pi(p, de);
  for (std::size_t q = 0; q < p; ++q)
    for (std::size_t k = 0; k < de; ++k) pi(q, k) = (*t_inv)(d + q, k);
  const Mat f0 = e2.sigma * e.p + e2.i * pi;
  auto residual = [&](const Mat& f) {
    Vec r;
    for (std::size_t x = 0; x < de; ++x)
      for (std::size_t y = 0; y < de; ++y) {
        const Vec v = sub(f * e.total.basis_product(x, y), e2.total.mul(f.col(x), f.col(y)));
        r.insert(r.end(), v.begin(), v.end());
      }
    const Vec u = sub(f * e.total.unit(), e2.total.unit());
    r.insert(r.end(), u.begin(), u.end());
    return r;
  };
  const Vec r0 = residual(f0);
  Mat sys(r0.size(), p * d);
  for (std::size_t q = 0; q < p; ++q)
    for (std::size_t k = 0; k < d; ++k) {
      Mat h(p, d);
      h(q, k) = 1;
      const Vec r = sub(residual(f0 + e2.i * h * e.p), r0);
      for (std::size_t s = 0; s < r.size(); ++s) sys(s, q * d + k) = r[s];
    }
  Vec rhs = r0;
  for (auto& v : rhs) v = -v;
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Mat h(p, d);
  for (std::size_t q = 0; q < p; ++q)
    for (std::size_t k = 0; k < d; ++k) h(q, k) = (*sol)[q * d + k];
  Mat f = f0 + e2.i * h * e.p;
  if (!is_zero(residual(f)) || f * e.i != e2.i || e2.p * f != e.p)
    throw std::logic_error("extension equivalence failed verification");
  return f;
}

HarrisonResult harrison2(const FDAlgebra& r, const Bimodule& m_in) {
  r.validate();
  m_in.validate(r);
  if (!r.is_commutative()) throw ValidationError(r.name() + " is not commutative");
  if (!m_in.is_symmetric()) throw ValidationError("coefficient module is not symmetric");
  const std::size_t d = r.dim(), p = m_in.dim;
  const UnitFirstBasis ub = unit_first(r);
  const FDAlgebra& b = ub.algebra;
  const Bimodule m = ub.transform(m_in);
  const std::size_t db = d - 1;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // i <= j, new basis indices >= 1
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      pair_index[{i, j}] = pairs.size();
      pairs.emplace_back(i, j);
    }
  auto sym_col = [&](std::size_t i, std::size_t j) {
    return pair_index.at({std::min(i, j), std::max(i, j)});
  };
  const std::size_t s = pairs.size() * p;
  // delta_2 on symmetric normalized cochains: rows (a, b, c, q) with a, b, c >= 1.
  Mat d2(db * db * db * p, s);
  for (std::size_t a = 1; a < d; ++a)
    for (std::size_t bb = 1; bb < d; ++bb)
      for (std::size_t c = 1; c < d; ++c) {
        const std::size_t row = (((a - 1) * db + (bb - 1)) * db + (c - 1)) * p;
        put_block(d2, row, sym_col(bb, c) * p, m.left[a]);
        put_block(d2, row, sym_col(a, bb) * p, m.right[c], -1);
        for (std::size_t k = 1; k < d; ++k) {
          if (sgn(b.c(a, bb, k)) != 0) put_block(d2, row, sym_col(k, c) * p, Mat::identity(p), -b.c(a, bb, k));
          if (sgn(b.c(bb, c, k)) != 0) put_block(d2, row, sym_col(a, k) * p, Mat::identity(p), b.c(bb, c, k));
        }
      }
  // delta_1 of normalized 1-cochains, read in symmetric coordinates.
  Mat d1(s, db * p);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    const auto [a, c] = pairs[t];
    put_block(d1, t * p, (c - 1) * p, m.left[a]);
    put_block(d1, t * p, (a - 1) * p, m.right[c]);
    for (std::size_t k = 1; k < d; ++k)
      if (sgn(b.c(a, c, k)) != 0) put_block(d1, t * p, (k - 1) * p, Mat::identity(p), -b.c(a, c, k));
  }
  const auto kernel = nullspace(d2);
  SparseRowSpace space(s);
  for (const auto& v : column_space(d1)) space.insert(sparse_row(v));
  HarrisonResult out;
  for (const auto& v : kernel) {
    if (!space.insert(sparse_row(v))) continue;
    TwoCochain w = TwoCochain::zero(r, m_in);
    // omega_old(e_k, e_l) = sum_{a,b} (to_new e_k)_a (to_new e_l)_b omega_new(a, b)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l) {
        Vec val(p);
        for (std::size_t a = 1; a < d; ++a)
          for (std::size_t c = 1; c < d; ++c) {
            const Rational coef = ub.to_new(a, k) * ub.to_new(c, l);
            if (sgn(coef) == 0) continue;
            const std::size_t col = sym_col(a, c) * p;
            for (std::size_t q = 0; q < p; ++q) val[q] += coef * v[col + q];
          }
        w.at(k, l) = std::move(val);
      }
    out.basis.push_back(std::move(w));
  }
  out.dim = out.basis.size();
  return out;
}

bool is_algebra_map(const FDAlgebra& a, const FDAlgebra& b, const Mat& f) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) return false;
  if (f * a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (f * a.basis_product(i, j) != b.mul(f.col(i), f.col(j))) return false;
  return true;
}

std::optional<Mat> lift_algebra_map(const FDAlgebra& a, const Mat& f, const HochschildExtension& e) {
  if (!is_algebra_map(a, e.base, f)) throw ValidationError("f is not an algebra map");
  const TwoCochain w = classify_extension(e);
  // Pull the cocycle and the coefficients back along f.
  Bimodule mf;
  mf.dim = e.coeffs.dim;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    mf.left.push_back(e.coeffs.left_action(f.col(i)));
    mf.right.push_back(e.coeffs.right_action(f.col(i)));
  }
  TwoCochain pulled = TwoCochain::zero(a, mf);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) pulled.at(i, j) = w(f.col(i), f.col(j));
  const auto h = coboundary_witness(pulled);
  if (!h) return std::nullopt;
  Mat lift = e.sigma * f + e.i * *h;
  if (!is_algebra_map(a, e.total, lift) || e.p * lift != f) throw std::logic_error("lift failed verification");
  return lift;
}

namespace {

struct FDOps {
  const FDAlgebra* alg;
  Vec one() const { return alg->unit(); }
  Vec add(const Vec& x, const Vec& y) const {
    Vec out = x;
    axpy(out, 1, y);
    return out;
  }
  Vec mul(const Vec& x, const Vec& y) const { return alg->mul(x, y); }
  Vec scale(const Rational& c, const Vec& x) const {
    Vec out = x;
    for (auto& v : out) v *= c;
    return out;
  }
};

struct AlgMatOps {
  const FDAlgebra* alg;
  std::size_t n;
  AlgMatrix one() const {
    AlgMatrix m{n, std::vector<Vec>(n * n, Vec(alg->dim()))};
    for (std::size_t i = 0; i < n; ++i) m(i, i) = alg->unit();
    return m;
  }
  AlgMatrix add(const AlgMatrix& x, const AlgMatrix& y) const {
    AlgMatrix out = x;
    for (std::size_t k = 0; k < out.entries.size(); ++k) axpy(out.entries[k], 1, y.entries[k]);
    return out;
  }
  AlgMatrix mul(const AlgMatrix& x, const AlgMatrix& y) const {
    AlgMatrix out{n, std::vector<Vec>(n * n, Vec(alg->dim()))};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < n; ++s) {
        if (is_zero(x(i, s))) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!is_zero(y(s, j))) axpy(out(i, j), 1, alg->mul(x(i, s), y(s, j)));
      }
    return out;
  }
  AlgMatrix scale(const Rational& c, const AlgMatrix& x) const {
    AlgMatrix out = x;
    for (auto& e : out.entries)
      for (auto& v : e) v *= c;
    return out;
  }
};

}  // namespace

std::optional<std::vector<Vec>> lift_algebra_map(const AlgebraPresentation& a, const std::vector<Vec>& f,
                                                 const HochschildExtension& e) {
  e.validate();
  if (f.size() != a.m) throw DimensionMismatch("need one image per generator");
  const FDOps bops{&e.base};
  for (const auto& r : a.relations)
    if (!is_zero(evaluate_in<Vec>(r, f, bops))) throw ValidationError("f does not respect the relation " + to_string(r));
  const FDOps eops{&e.total};
  const std::size_t p = e.coeffs.dim;
  auto images = [&](const Vec& ms) {
    std::vector<Vec> g;
    for (std::size_t l = 0; l < a.m; ++l) {
      Vec v = e.sigma * f[l];
      axpy(v, 1, e.i * std::span<const Rational>(ms).subspan(l * p, p));
      g.push_back(std::move(v));
    }
    return g;
  };
  auto residual = [&](const Vec& ms) {
    const auto g = images(ms);
    Vec r;
    for (const auto& rel : a.relations) {
      const Vec v = evaluate_in<Vec>(rel, g, eops);
      r.insert(r.end(), v.begin(), v.end());
    }
    return r;
  };
  const Vec zero(a.m * p);
  const Vec r0 = residual(zero);
  Mat sys(r0.size(), a.m * p);
  for (std::size_t k = 0; k < a.m * p; ++k) {
    Vec unit = zero;
    unit[k] = 1;
    const Vec col = sub(residual(unit), r0);
    for (std::size_t s = 0; s < col.size(); ++s) sys(s, k) = col[s];
  }
  Vec rhs = r0;
  for (auto& v : rhs) v = -v;
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  auto g = images(*sol);
  if (!is_zero(residual(*sol))) throw std::logic_error("lift failed verification");
  return g;
}

std::vector<NCWord> words_up_to(std::uint32_t m, std::uint32_t length) {
  std::vector<NCWord> out{{}};
  std::size_t begin = 0;
  for (std::uint32_t len = 1; len <= length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (std::uint32_t l = 0; l < m; ++l) {
        NCWord w = out[k];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

namespace {

Mat character_of(const AlgMatrix& x, std::span<const Rational> f) {
  Mat out(x.n, x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j)
      for (std::size_t k = 0; k < f.size(); ++k)
        if (sgn(f[k]) != 0) out(i, j) += f[k] * x(i, j)[k];
  return out;
}

}  // namespace

AmplifiedCochain amplify(const TwoCochain& w, const AlgebraPresentation& a, const std::vector<AlgMatrix>& eta,
                         std::uint32_t degree_bound) {
  const FDAlgebra& b = w.base;
  if (!b.is_commutative()) throw ValidationError("amplification needs a commutative algebra");
  if (w.coeffs.dim != 1 || !w.coeffs.is_symmetric()) throw ValidationError("coefficients must be a character k_f");
  if (!is_cocycle(w)) throw ValidationError("input is not a Hochschild 2-cocycle");
  if (eta.size() != a.m) throw DimensionMismatch("need one matrix per generator");
  const std::size_t n = eta.front().n;
  const AlgMatOps ops{&b, n};
  for (std::size_t k = 0; k < a.relations.size(); ++k) {
    const AlgMatrix v = evaluate_in<AlgMatrix>(a.relations[k], eta, ops);
    for (const auto& e : v.entries)
      if (!is_zero(e)) throw ValidationError("eta violates relation " + std::to_string(k + 1));
  }
  Vec f(b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k) f[k] = w.coeffs.left[k](0, 0);

  AmplifiedCochain out;
  out.algebra = a;
  out.n = n;
  out.degree_bound = degree_bound;
  out.words = words_up_to(a.m, degree_bound);
  for (const auto& x : eta) out.rho.push_back(character_of(x, f));

  std::map<NCWord, AlgMatrix> memo;
  auto eta_of = [&](const NCWord& word) -> const AlgMatrix& {
    auto it = memo.find(word);
    if (it != memo.end()) return it->second;
    return memo.emplace(word, evaluate_word_in<AlgMatrix>(word, eta, ops)).first->second;
  };
  auto wbar = [&](const NCWord& u, const NCWord& v) {
    const AlgMatrix& x = eta_of(u);
    const AlgMatrix& y = eta_of(v);
    Mat r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t s = 0; s < n; ++s) r(i, j) += w(x(i, s), y(s, j))[0];
    return r;
  };
  auto rho_of = [&](const NCWord& word) { return character_of(eta_of(word), f); };
  auto concat = [](NCWord u, const NCWord& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  };
  const std::size_t nw = out.words.size();
  out.values.reserve(nw * nw);
  for (const auto& u : out.words)
    for (const auto& v : out.words) out.values.push_back(wbar(u, v));
  for (std::size_t ia = 0; ia < nw; ++ia)
    for (std::size_t ib = 0; ib < nw; ++ib)
      for (std::size_t ic = 0; ic < nw; ++ic) {
        const NCWord& x = out.words[ia];
        const NCWord& y = out.words[ib];
        const NCWord& z = out.words[ic];
        const Mat s = rho_of(x) * out.at(ib, ic) - wbar(concat(x, y), z) + wbar(x, concat(y, z)) -
                      out.at(ia, ib) * rho_of(z);
        if (!s.is_zero())
          throw ValidationError("amplified cochain fails the cocycle identity on (" + word_to_string(x) + ", " +
                                word_to_string(y) + ", " + word_to_string(z) + ")");
      }
  return out;
}

std::vector<Mat> amplify_map(const Mat& h, const FDAlgebra& b, const std::vector<AlgMatrix>& eta,
                             const std::vector<NCWord>& words) {
  const std::size_t n = eta.front().n;
  const AlgMatOps ops{&b, n};
  std::vector<Mat> out;
  for (const auto& word : words) {
    const AlgMatrix x = evaluate_word_in<AlgMatrix>(word, eta, ops);
    Mat r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(i, j) = (h * x(i, j))[0];
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<std::vector<Mat>> bounded_coboundary(const AmplifiedCochain& w) {
  const std::size_t n = w.n, nn = n * n;
  const auto all = words_up_to(w.algebra.m, 2 * w.degree_bound);
  std::map<NCWord, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k], k);
  auto rho_of = [&](const NCWord& word) { return evaluate_word(word, w.rho); };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> constraints;  // sum c h(word) = 0
  for (const auto& r : w.algebra.relations) {
    if (r.is_zero()) continue;
    const std::size_t deg = r.degree();
    if (deg > 2 * w.degree_bound) continue;
    for (const auto& u : all)
      for (const auto& v : all) {
        if (u.size() + deg + v.size() > 2 * w.degree_bound) continue;
        std::vector<std::pair<std::size_t, Rational>> c;
        for (const auto& [t, coef] : r.terms()) {
          NCWord x = u;
          x.insert(x.end(), t.begin(), t.end());
          x.insert(x.end(), v.begin(), v.end());
          c.emplace_back(index.at(x), coef);
        }
        constraints.push_back(std::move(c));
      }
  }
  const std::size_t nw = w.words.size();
  Mat sys((constraints.size() + nw * nw) * nn, all.size() * nn);
  Vec rhs(sys.rows());
  const Mat id = Mat::identity(n);
  std::size_t row = 0;
  for (const auto& c : constraints) {
    for (const auto& [k, coef] : c) put_block(sys, row, k * nn, Mat::identity(nn), coef);
    row += nn;
  }
  for (std::size_t ia = 0; ia < nw; ++ia)
    for (std::size_t ib = 0; ib < nw; ++ib) {
      const NCWord& x = w.words[ia];
      const NCWord& y = w.words[ib];
      NCWord xy = x;
      xy.insert(xy.end(), y.begin(), y.end());
      put_block(sys, row, index.at(y) * nn, kron(rho_of(x), id));
      put_block(sys, row, index.at(xy) * nn, Mat::identity(nn), -1);
      put_block(sys, row, index.at(x) * nn, kron(id, rho_of(y).transpose()));
      const Vec target = flatten(w.at(ia, ib));
      for (std::size_t q = 0; q < nn; ++q) rhs[row + q] = target[q];
      row += nn;
    }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  std::vector<Mat> h;
  for (std::size_t k = 0; k < all.size(); ++k)
    h.push_back(unflatten(std::span<const Rational>(*sol).subspan(k * nn, nn), n, n));
  return h;
}

}  // namespace repsmooth
