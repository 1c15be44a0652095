#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "repsmooth/cohomology.hpp"
#include "repsmooth/presentation.hpp"

namespace repsmooth {

// X_l(t) = X_l + sum_{r=1}^{order-1} t^r X_l^(r) mod t^order.
struct TruncatedDeformation {
  RepPoint base;
  std::uint32_t order = 1;
  std::vector<std::vector<Mat>> coeffs;  // coeffs[r - 1][l] = X_l^(r)

  // Coefficient t^r of generator l, zero beyond the stored range.
  Mat coefficient(std::size_t r, std::size_t l) const;
  // Throws ValidationError unless every relation vanishes mod t^order.
  void validate(const AlgebraPresentation& a) const;
};

TruncatedDeformation first_order(const RepPoint& x, const std::vector<Mat>& d);

struct ObstructionResidual {
  std::uint32_t order = 0;              // the t-power that could not be cancelled
  std::vector<Mat> residual;            // t^order coefficient per relation
  std::vector<Vec> linearization_span;  // column space of D -> (leibniz(f, X, D))_f
};

using LiftResult = std::variant<TruncatedDeformation, ObstructionResidual>;

// Splits a generator-major flattened tangent vector into matrices.
std::vector<Mat> as_matrices(std::span<const Rational> v, std::size_t m, std::size_t n);

// Same as derivation_space.
Subspace tangent_vectors(const AlgebraPresentation& a, const RepPoint& x);

// Coefficients of t^0..t^(len-1) of f evaluated on the truncated arc.
std::vector<Mat> evaluate_series(const NCPoly& f, const TruncatedDeformation& d, std::size_t len);

LiftResult lift_step(const AlgebraPresentation& a, const TruncatedDeformation& d);

struct IntegrationResult {
  std::uint32_t achieved_order = 0;
  TruncatedDeformation arc;
  std::optional<ObstructionResidual> obstruction;
};

// Throws ValidationError when D is not tangent at X.
IntegrationResult integrate(const AlgebraPresentation& a, const RepPoint& x, const std::vector<Mat>& d,
                            std::uint32_t max_order);

}  // namespace repsmooth
