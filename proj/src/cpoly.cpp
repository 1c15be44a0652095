#include "repsmooth/cpoly.hpp"

#include <algorithm>

#include "repsmooth/error.hpp"

namespace repsmooth {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint32_t monomial_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

CPoly CPoly::constant(const Rational& c) { return monomial({}, c); }
CPoly CPoly::variable(std::uint32_t v) { return monomial({{v, 1}}, 1); }

CPoly CPoly::monomial(Monomial m, const Rational& c) {
  CPoly p;
  p.add_term(m, c);
  return p;
}

bool CPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational CPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t CPoly::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

void CPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CPoly& CPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly out;
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) out.add_term(monomial_mul(m1, m2), c1 * c2);
  return out;
}

CPoly CPoly::derivative(std::uint32_t v) const {
  CPoly out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k].first != v) continue;
      Monomial d = m;
      const auto e = d[k].second;
      if (--d[k].second == 0) d.erase(d.begin() + static_cast<std::ptrdiff_t>(k));
      out.add_term(d, c * e);
    }
  }
  return out;
}

Rational CPoly::evaluate(std::span<const Rational> values) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      if (v >= values.size()) throw DimensionMismatch("evaluation point too short");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), values[v].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), values[v].get_den_mpz_t(), e);
      t *= p;
    }
    acc += t;
  }
  return acc;
}

std::string to_string(const Monomial& m, const VarNamer& name) {
  if (m.empty()) return "1";
  std::string s;
  bool first = true;
  for (const auto& [v, e] : m) {
    if (!first) s += '*';
    first = false;
    s += name(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string to_string(const CPoly& p, const VarNamer& name) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Highest degree first, then lexicographic in the variable order.
  std::vector<const CPoly::Terms::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return monomial_degree(a->first) > monomial_degree(b->first);
  });
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += to_string(m, name);
    }
  }
  return out;
}

std::string GenericLayout::name(std::uint32_t v) const {
  const auto j = v % n;
  const auto i = (v / n) % n;
  const auto l = v / (n * n);
  return "xi_{" + std::to_string(l + 1) + ',' + std::to_string(i + 1) + ',' + std::to_string(j + 1) + '}';
}

namespace {

// n x n matrices of commutative polynomials, row-major.
struct PolyMatOps {
  std::uint32_t n;
  using M = std::vector<CPoly>;
  M one() const {
    M out(n * n);
    for (std::uint32_t i = 0; i < n; ++i) out[i * n + i] = CPoly::constant(1);
    return out;
  }
  M add(const M& a, const M& b) const {
    M out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return out;
  }
  M mul(const M& a, const M& b) const {
    M out(n * n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t s = 0; s < n; ++s) {
        if (a[i * n + s].is_zero()) continue;
        for (std::uint32_t j = 0; j < n; ++j)
          if (!b[s * n + j].is_zero()) out[i * n + j] += a[i * n + s] * b[s * n + j];
      }
    return out;
  }
  M scale(const Rational& c, const M& a) const {
    M out = a;
    for (auto& p : out) p *= c;
    return out;
  }
};

}  // namespace

std::vector<CPoly> symbolic_entries(const NCPoly& f, std::uint32_t n) {
  const GenericLayout layout{f.generators(), n};
  std::vector<std::vector<CPoly>> generic(f.generators(), std::vector<CPoly>(n * n));
  for (std::uint32_t l = 0; l < f.generators(); ++l)
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) generic[l][i * n + j] = CPoly::variable(layout.index(l, i, j));
  return evaluate_in<std::vector<CPoly>>(f, generic, PolyMatOps{n});
}

Vec flatten_point(std::span<const Mat> point) {
  Vec out;
  for (const auto& x : point) {
    const auto e = x.entries();
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

}  // namespace repsmooth
