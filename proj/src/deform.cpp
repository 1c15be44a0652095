#include "repsmooth/deform.hpp"

#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"
#include "repsmooth/repscheme.hpp"

namespace repsmooth {

namespace {

// Matrix power series truncated at a fixed length.
struct SeriesOps {
  std::size_t n;
  std::size_t len;
  using S = std::vector<Mat>;
  S one() const {
    S s(len, Mat(n, n));
    s[0] = Mat::identity(n);
    return s;
  }
  S add(const S& x, const S& y) const {
    S out(len);
    for (std::size_t r = 0; r < len; ++r) out[r] = x[r] + y[r];
    return out;
  }
  S mul(const S& x, const S& y) const {
    S out(len, Mat(n, n));
    for (std::size_t i = 0; i < len; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < len; ++j)
        if (!y[j].is_zero()) out[i + j] += x[i] * y[j];
    }
    return out;
  }
  S scale(const Rational& c, const S& x) const {
    S out(len);
    for (std::size_t r = 0; r < len; ++r) out[r] = x[r] * c;
    return out;
  }
};

}  // namespace

Mat TruncatedDeformation::coefficient(std::size_t r, std::size_t l) const {
  if (r == 0) return base[l];
  if (r <= coeffs.size()) return coeffs[r - 1][l];
  return Mat(base.n(), base.n());
}

std::vector<Mat> evaluate_series(const NCPoly& f, const TruncatedDeformation& d, std::size_t len) {
  const SeriesOps ops{d.base.n(), len};
  std::vector<SeriesOps::S> gens;
  for (std::size_t l = 0; l < d.base.m(); ++l) {
    SeriesOps::S s(len);
    for (std::size_t r = 0; r < len; ++r) s[r] = r < d.order ? d.coefficient(r, l) : Mat(d.base.n(), d.base.n());
    gens.push_back(std::move(s));
  }
  return evaluate_in<SeriesOps::S>(f, gens, ops);
}

void TruncatedDeformation::validate(const AlgebraPresentation& a) const {
  if (order < 1) throw ValidationError("deformation order must be at least 1");
  if (coeffs.size() != order - 1) throw ValidationError("deformation needs order - 1 coefficient tuples");
  for (const auto& c : coeffs) {
    if (c.size() != base.m()) throw DimensionMismatch("coefficient tuple has the wrong number of generators");
    for (const auto& m : c)
      if (m.rows() != base.n() || m.cols() != base.n()) throw DimensionMismatch("coefficient of the wrong size");
  }
  for (std::size_t k = 0; k < a.relations.size(); ++k) {
    const auto s = evaluate_series(a.relations[k], *this, order);
    for (std::size_t r = 0; r < order; ++r)
      if (!s[r].is_zero())
        throw ValidationError("relation " + std::to_string(k + 1) + " does not vanish at t^" + std::to_string(r));
  }
}

TruncatedDeformation first_order(const RepPoint& x, const std::vector<Mat>& d) {
  return TruncatedDeformation{x, 2, {d}};
}

std::vector<Mat> as_matrices(std::span<const Rational> v, std::size_t m, std::size_t n) {
  if (v.size() != m * n * n) throw DimensionMismatch("tangent vector has the wrong length");
  std::vector<Mat> out;
  for (std::size_t l = 0; l < m; ++l) out.push_back(unflatten(v.subspan(l * n * n, n * n), n, n));
  return out;
}

Subspace tangent_vectors(const AlgebraPresentation& a, const RepPoint& x) { return derivation_space(a, x); }

LiftResult lift_step(const AlgebraPresentation& a, const TruncatedDeformation& d) {
  d.validate(a);
  const std::size_t n = d.base.n();
  const std::uint32_t s = d.order;
  std::vector<Mat> residual;
  Vec rhs;
  for (const auto& f : a.relations) {
    Mat c = evaluate_series(f, d, s + 1)[s];
    const Vec v = flatten(c);
    for (const auto& x : v) rhs.push_back(-x);
    residual.push_back(std::move(c));
  }
  const Mat lin = derivation_constraints(a, d.base);
  TruncatedDeformation next = d;
  next.order = s + 1;
  std::vector<Mat> step;
  if (a.relations.empty()) {
    step.assign(d.base.m(), Mat(n, n));
  } else {
    const auto sol = solve(lin, rhs);
    if (!sol) return ObstructionResidual{s, std::move(residual), column_space(lin)};
    step = as_matrices(*sol, d.base.m(), n);
  }
  next.coeffs.push_back(std::move(step));
  next.validate(a);
  return next;
}

IntegrationResult integrate(const AlgebraPresentation& a, const RepPoint& x, const std::vector<Mat>& d,
                            std::uint32_t max_order) {
  require_point(a, x);
  if (d.size() != x.m()) throw DimensionMismatch("tangent needs one matrix per generator");
  for (const auto& f : a.relations)
    if (!leibniz(f, x.span(), d).is_zero()) throw ValidationError("direction is not tangent at the point");
  IntegrationResult out;
  out.arc = max_order >= 2 ? first_order(x, d) : TruncatedDeformation{x, 1, {}};
  out.arc.validate(a);
  while (out.arc.order < max_order) {
    LiftResult r = lift_step(a, out.arc);
    if (auto* obs = std::get_if<ObstructionResidual>(&r)) {
      out.obstruction = std::move(*obs);
      break;
    }
    out.arc = std::move(std::get<TruncatedDeformation>(r));
  }
  out.achieved_order = out.arc.order;
  return out;
}

}  // namespace repsmooth
