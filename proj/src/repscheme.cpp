#include "repsmooth/repscheme.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"

namespace repsmooth {

std::size_t CommIdealPresentation::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(generators.begin(), generators.end(), [](const IdealGenerator& g) { return !g.zero; }));
}

CommIdealPresentation build_vn(const AlgebraPresentation& a, std::uint32_t n) {
  if (n == 0) throw DimensionMismatch("n must be positive");
  a.validate();
  CommIdealPresentation v;
  v.n = n;
  v.m = a.m;
  v.layout = GenericLayout{a.m, n};
  for (std::uint32_t r = 0; r < a.relations.size(); ++r) {
    auto entries = symbolic_entries(a.relations[r], n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        IdealGenerator g;
        g.poly = std::move(entries[i * n + j]);
        g.relation = r;
        g.row = i;
        g.col = j;
        g.zero = g.poly.is_zero();
        v.generators.push_back(std::move(g));
      }
  }
  return v;
}

std::optional<RelationViolation> first_violation(const AlgebraPresentation& a, const RepPoint& x) {
  if (x.m() != a.m) throw DimensionMismatch("point has " + std::to_string(x.m()) + " matrices, algebra has " +
                                            std::to_string(a.m) + " generators");
  for (std::uint32_t r = 0; r < a.relations.size(); ++r) {
    const Mat v = evaluate(a.relations[r], x.span());
    for (std::uint32_t i = 0; i < v.rows(); ++i)
      for (std::uint32_t j = 0; j < v.cols(); ++j)
        if (sgn(v(i, j)) != 0) return RelationViolation{r, i, j, v(i, j)};
  }
  return std::nullopt;
}

bool is_point(const AlgebraPresentation& a, const RepPoint& x) { return !first_violation(a, x).has_value(); }

void require_point(const AlgebraPresentation& a, const RepPoint& x) {
  if (auto v = first_violation(a, x))
    throw NotOnScheme("relation " + std::to_string(v->relation + 1) + " entry (" + std::to_string(v->row + 1) + "," +
                      std::to_string(v->col + 1) + ") evaluates to " + to_string(v->value));
}

Mat jacobian(const CommIdealPresentation& v, const RepPoint& x) {
  if (x.m() != v.m || x.n() != v.n) throw DimensionMismatch("point shape does not match the scheme");
  const Vec values = flatten_point(x.span());
  Mat j(v.generators.size(), v.num_vars());
  for (std::size_t g = 0; g < v.generators.size(); ++g) {
    const auto& poly = v.generators[g].poly;
    for (const auto& [mono, c] : poly.terms()) {
      // d/d xi_var of c * prod xi^e, evaluated at X.
      for (std::size_t k = 0; k < mono.size(); ++k) {
        Rational t = c * mono[k].second;
        for (std::size_t q = 0; q < mono.size() && sgn(t) != 0; ++q) {
          const auto e = q == k ? mono[q].second - 1 : mono[q].second;
          for (std::uint32_t p = 0; p < e; ++p) t *= values[mono[q].first];
        }
        if (sgn(t) != 0) j(g, mono[k].first) += t;
      }
    }
  }
  return j;
}

std::size_t jacobian_rank(const CommIdealPresentation& v, const RepPoint& x) { return rank(jacobian(v, x)); }

std::size_t jacobian_tangent_dim(const CommIdealPresentation& v, const RepPoint& x) {
  if (x.m() != v.m || x.n() != v.n) throw DimensionMismatch("point shape does not match the scheme");
  const Vec values = flatten_point(x.span());
  for (const auto& g : v.generators)
    if (!g.zero && sgn(g.poly.evaluate(values)) != 0)
      throw NotOnScheme("ideal generator from relation " + std::to_string(g.relation + 1) + " entry (" +
                        std::to_string(g.row + 1) + "," + std::to_string(g.col + 1) + ") does not vanish");
  return v.num_vars() - jacobian_rank(v, x);
}

namespace {

// All monomials in `vars` variables of total degree exactly d, in a fixed order.
void monomials_of_degree(std::uint32_t vars, std::uint32_t d, std::uint32_t start, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t v = start; v < vars; ++v) {
    const bool extend = !cur.empty() && cur.back().first == v;
    if (extend)
      ++cur.back().second;
    else
      cur.emplace_back(v, 1);
    monomials_of_degree(vars, d - 1, v, cur, out);
    if (extend)
      --cur.back().second;
    else
      cur.pop_back();
  }
}

std::vector<Monomial> monomials_up_to(std::uint32_t vars, std::uint32_t bound) {
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d <= bound; ++d) {
    Monomial cur;
    monomials_of_degree(vars, d, 0, cur, out);
  }
  return out;
}

std::optional<UnitCertificate> detect_at(const CommIdealPresentation& v, std::uint32_t bound) {
  const auto multipliers = monomials_up_to(v.num_vars(), bound);
  struct Column {
    std::size_t generator;
    const Monomial* multiplier;
  };
  std::vector<Column> columns;
  std::map<Monomial, std::size_t> row_of;
  row_of.emplace(Monomial{}, 0);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> col_entries;
  for (std::size_t g = 0; g < v.generators.size(); ++g) {
    if (v.generators[g].zero) continue;
    for (const auto& mu : multipliers) {
      std::vector<std::pair<std::size_t, Rational>> entries;
      for (const auto& [mono, c] : v.generators[g].poly.terms()) {
        auto [it, inserted] = row_of.try_emplace(monomial_mul(mono, mu), row_of.size());
        entries.emplace_back(it->second, c);
      }
      columns.push_back({g, &mu});
      col_entries.push_back(std::move(entries));
    }
  }
  if (columns.empty()) return std::nullopt;
  Mat sys(row_of.size(), columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& [r, c] : col_entries[k]) sys(r, k) += c;
  Vec rhs(row_of.size());
  rhs[0] = 1;
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;

  // Scale to a primitive integer vector with positive first coefficient.
  Integer den = 1;
  Integer num_gcd = 0;
  for (const auto& c : *sol) {
    if (sgn(c) == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : *sol) {
    if (sgn(c) == 0) continue;
    const Integer scaled = c.get_num() * (den / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den, num_gcd);
  scale.canonicalize();
  for (const auto& c : *sol)
    if (sgn(c) != 0) {
      if (sgn(c) < 0) scale = -scale;
      break;
    }
  UnitCertificate cert;
  cert.degree_bound = bound;
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (sgn((*sol)[k]) != 0)
      cert.terms.push_back({columns[k].generator, *columns[k].multiplier, Rational((*sol)[k] * scale)});
  cert.value = scale;
  return cert;
}

}  // namespace

std::optional<UnitCertificate> detect_unit(const CommIdealPresentation& v, std::uint32_t degree_bound) {
  if (v.nonzero_count() == 0) return std::nullopt;
  for (std::uint32_t b = 0; b <= degree_bound; ++b)
    if (auto c = detect_at(v, b)) return c;
  return std::nullopt;
}

CPoly certificate_polynomial(const CommIdealPresentation& v, const UnitCertificate& c) {
  CPoly out;
  for (const auto& t : c.terms) out += CPoly::monomial(t.multiplier, t.coeff) * v.generators.at(t.generator).poly;
  return out;
}

namespace {

CPoly truncated(const CPoly& p, std::uint32_t order) {
  CPoly out;
  for (const auto& [mono, c] : p.terms())
    if (monomial_degree(mono) < order) out.add_term(mono, c);
  return out;
}

// p(X + u) truncated below `order`.
CPoly shift(const CPoly& p, std::span<const Rational> x, std::uint32_t order) {
  CPoly out;
  for (const auto& [mono, c] : p.terms()) {
    CPoly term = CPoly::constant(c);
    for (const auto& [var, e] : mono) {
      const CPoly lin = CPoly::constant(x[var]) + CPoly::variable(var);
      for (std::uint32_t k = 0; k < e; ++k) term = truncated(term * lin, order);
    }
    out += term;
  }
  return out;
}

}  // namespace

ArtinianTruncation truncate(const AlgebraPresentation& a, const RepPoint& x, std::uint32_t order) {
  if (order == 0) throw DimensionMismatch("truncation order must be positive");
  require_point(a, x);
  const auto n = static_cast<std::uint32_t>(x.n());
  const CommIdealPresentation v = build_vn(a, n);
  const Vec values = flatten_point(x.span());
  const std::uint32_t vars = v.num_vars();

  // Ambient space: monomials of degree < order, highest degree first so that
  // pivots consume high-degree monomials and low-degree ones stay standard.
  std::vector<Monomial> ambient = monomials_up_to(vars, order - 1);
  std::stable_sort(ambient.begin(), ambient.end(),
                   [](const Monomial& p, const Monomial& q) { return monomial_degree(p) > monomial_degree(q); });
  std::map<Monomial, std::size_t> col_of;
  for (std::size_t k = 0; k < ambient.size(); ++k) col_of.emplace(ambient[k], k);

  std::vector<Vec> rows;
  for (const auto& g : v.generators) {
    if (g.zero) continue;
    const CPoly s = shift(g.poly, values, order);
    for (const auto& mu : ambient) {
      Vec row(ambient.size());
      bool any = false;
      for (const auto& [mono, c] : s.terms()) {
        Monomial prod = monomial_mul(mono, mu);
        if (monomial_degree(prod) >= order) continue;
        row[col_of.at(prod)] += c;
        any = true;
      }
      if (any && !is_zero(row)) rows.push_back(std::move(row));
    }
  }
  Mat span_mat(rows.size(), ambient.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < ambient.size(); ++k) span_mat(r, k) = rows[r][k];
  const Echelon ech = echelon(span_mat);
  std::vector<bool> is_pivot(ambient.size(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<std::size_t> standard;
  for (std::size_t k = ambient.size(); k-- > 0;)
    if (!is_pivot[k]) standard.push_back(k);  // low degree first
  if (standard.empty() || ambient[standard.front()].size() != 0)
    throw ValidationError("truncation collapsed: the ideal contains a unit near the point");

  auto normal_form = [&](Vec w) {
    for (std::size_t r = 0; r < ech.rank(); ++r) {
      const Rational c = w[ech.pivots[r]];
      if (sgn(c) == 0) continue;
      const auto row = ech.rref.row(r);
      for (std::size_t k = 0; k < w.size(); ++k)
        if (sgn(row[k]) != 0) w[k] -= c * row[k];
    }
    Vec out(standard.size());
    for (std::size_t s = 0; s < standard.size(); ++s) out[s] = w[standard[s]];
    return out;
  };
  auto monomial_vec = [&](const Monomial& mono) {
    Vec w(ambient.size());
    if (monomial_degree(mono) < order) w[col_of.at(mono)] = 1;
    return w;
  };

  ArtinianTruncation t;
  const std::size_t d = standard.size();
  t.algebra = FDAlgebra(a.name + "-trunc" + std::to_string(order), d);
  std::vector<std::string> labels;
  const VarNamer namer = [&](std::uint32_t var) { return "u" + v.layout.name(var).substr(2); };
  for (auto s : standard) {
    t.basis.push_back(ambient[s]);
    labels.push_back(to_string(ambient[s], namer));
  }
  t.algebra.set_labels(std::move(labels));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec prod = normal_form(monomial_vec(monomial_mul(t.basis[i], t.basis[j])));
      for (std::size_t k = 0; k < d; ++k) t.algebra.c(i, j, k) = prod[k];
    }
  Vec unit(d);
  unit[0] = 1;
  t.algebra.set_unit(unit);
  t.augmentation = Vec(d);
  t.augmentation[0] = 1;
  for (std::uint32_t l = 0; l < a.m; ++l) {
    AlgMatrix e{n, std::vector<Vec>(n * n)};
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        Vec w = monomial_vec(Monomial{{v.layout.index(l, i, j), 1}});
        w[col_of.at(Monomial{})] += x[l](i, j);
        e(i, j) = normal_form(std::move(w));
      }
    t.eta.push_back(std::move(e));
  }
  return t;
}

}  // namespace repsmooth
