#include "repsmooth/fdalgebra.hpp"

#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"

namespace repsmooth {

FDAlgebra::FDAlgebra(std::string name, std::size_t dim)
    : name_(std::move(name)), dim_(dim), c_(dim * dim * dim), unit_(dim) {
  for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
}

void FDAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != dim_) throw DimensionMismatch("label count differs from dimension");
  labels_ = std::move(labels);
}

void FDAlgebra::set_unit(Vec u) {
  if (u.size() != dim_) throw DimensionMismatch("unit has wrong length");
  unit_ = std::move(u);
}

Vec FDAlgebra::basis(std::size_t i) const {
  Vec v(dim_);
  v[i] = 1;
  return v;
}

Vec FDAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vec v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vec FDAlgebra::mul(std::span<const Rational> a, std::span<const Rational> b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("algebra element has wrong length");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(c(i, j, k)) != 0) out[k] += ab * c(i, j, k);
    }
  }
  return out;
}

Mat FDAlgebra::left_mult(std::size_t i) const {
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
  return m;
}

Mat FDAlgebra::right_mult(std::size_t i) const {
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(j, i, k);
  return m;
}

bool FDAlgebra::is_associative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (mul(basis_product(i, j), basis(k)) != mul(basis(i), basis_product(j, k))) return false;
  return true;
}

bool FDAlgebra::is_unital() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    const Vec e = basis(i);
    if (mul(unit_, e) != e || mul(e, unit_) != e) return false;
  }
  return true;
}

bool FDAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != c(j, i, k)) return false;
  return true;
}

void FDAlgebra::validate() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (mul(basis_product(i, j), basis(k)) != mul(basis(i), basis_product(j, k)))
          throw ValidationError(name_ + ": associativity fails on (" + labels_[i] + ", " + labels_[j] + ", " +
                                labels_[k] + ")");
  for (std::size_t i = 0; i < dim_; ++i) {
    const Vec e = basis(i);
    if (mul(unit_, e) != e || mul(e, unit_) != e)
      throw ValidationError(name_ + ": unit law fails on " + labels_[i]);
  }
}

Mat Bimodule::left_action(std::span<const Rational> b) const {
  Mat out(dim, dim);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (sgn(b[i]) != 0) out += left[i] * b[i];
  return out;
}

Mat Bimodule::right_action(std::span<const Rational> b) const {
  Mat out(dim, dim);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (sgn(b[i]) != 0) out += right[i] * b[i];
  return out;
}

bool Bimodule::is_symmetric() const { return left == right; }

void Bimodule::validate(const FDAlgebra& b) const {
  const std::size_t d = b.dim();
  if (left.size() != d || right.size() != d) throw ValidationError("bimodule needs one action per basis element");
  for (std::size_t i = 0; i < d; ++i)
    if (left[i].rows() != dim || left[i].cols() != dim || right[i].rows() != dim || right[i].cols() != dim)
      throw ValidationError("bimodule action matrix has wrong size");
  const Mat id = Mat::identity(dim);
  if (left_action(b.unit()) != id || right_action(b.unit()) != id) throw ValidationError("bimodule is not unital");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec p = b.basis_product(i, j);
      if (left[i] * left[j] != left_action(p))
        throw ValidationError("left action is not associative on basis pair (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      // (v.e_i).e_j = v.(e_i e_j)
      if (right[j] * right[i] != right_action(p))
        throw ValidationError("right action is not associative on basis pair (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      if (left[i] * right[j] != right[j] * left[i])
        throw ValidationError("left and right actions do not commute on basis pair (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
    }
}

Bimodule Bimodule::regular(const FDAlgebra& b) {
  Bimodule m;
  m.dim = b.dim();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    m.left.push_back(b.left_mult(i));
    m.right.push_back(b.right_mult(i));
  }
  return m;
}

Bimodule Bimodule::tensor(std::span<const Mat> left_module, std::span<const Mat> right_source) {
  if (left_module.size() != right_source.size()) throw DimensionMismatch("module action counts differ");
  Bimodule m;
  const std::size_t p = left_module.front().rows();
  const std::size_t q = right_source.front().rows();
  m.dim = p * q;
  for (std::size_t i = 0; i < left_module.size(); ++i) {
    m.left.push_back(kron(left_module[i], Mat::identity(q)));
    m.right.push_back(kron(Mat::identity(p), right_source[i].transpose()));
  }
  return m;
}

Bimodule Bimodule::character(std::span<const Rational> f) {
  Bimodule m;
  m.dim = 1;
  for (const auto& v : f) {
    m.left.push_back(Mat{{v}});
    m.right.push_back(Mat{{v}});
  }
  return m;
}

Bimodule Bimodule::endomorphisms(std::span<const Mat> rho) {
  Bimodule m;
  const std::size_t n = rho.front().rows();
  m.dim = n * n;
  const Mat id = Mat::identity(n);
  for (const auto& r : rho) {
    // vec(R phi) = (R (x) I) vec(phi), vec(phi R) = (I (x) R^T) vec(phi) for row-major vec.
    m.left.push_back(kron(r, id));
    m.right.push_back(kron(id, r.transpose()));
  }
  return m;
}

Bimodule Bimodule::conjugated(const Mat& p, const Mat& p_inv) const {
  Bimodule out;
  out.dim = dim;
  for (const auto& l : left) out.left.push_back(p_inv * l * p);
  for (const auto& r : right) out.right.push_back(p_inv * r * p);
  return out;
}

UnitFirstBasis unit_first(const FDAlgebra& b) {
  const std::size_t d = b.dim();
  std::size_t pivot = d;
  for (std::size_t i = 0; i < d; ++i)
    if (sgn(b.unit()[i]) != 0) {
      pivot = i;
      break;
    }
  if (pivot == d) throw ValidationError(b.name() + ": zero unit vector");
  UnitFirstBasis out;
  out.to_old = Mat(d, d);
  for (std::size_t i = 0; i < d; ++i) out.to_old(i, 0) = b.unit()[i];
  std::size_t col = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == pivot) continue;
    out.to_old(j, col++) = 1;
  }
  // Inverse: new coords of old vector v are (v_p/u_p, v_j - (v_p/u_p) u_j).
  out.to_new = Mat(d, d);
  const Rational& up = b.unit()[pivot];
  out.to_new(0, pivot) = 1 / up;
  col = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == pivot) continue;
    out.to_new(col, j) = 1;
    out.to_new(col, pivot) = -b.unit()[j] / up;
    ++col;
  }
  FDAlgebra a(b.name(), d);
  std::vector<Vec> new_basis(d);
  for (std::size_t i = 0; i < d; ++i) new_basis[i] = out.to_old.col(i);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec prod = out.to_new * b.mul(new_basis[i], new_basis[j]);
      for (std::size_t k = 0; k < d; ++k) a.c(i, j, k) = prod[k];
    }
  Vec u(d);
  u[0] = 1;
  a.set_unit(std::move(u));
  std::vector<std::string> labels{"1"};
  for (std::size_t j = 0; j < d; ++j)
    if (j != pivot) labels.push_back(b.labels()[j]);
  a.set_labels(std::move(labels));
  out.algebra = std::move(a);
  return out;
}

Bimodule UnitFirstBasis::transform(const Bimodule& m) const {
  Bimodule out;
  out.dim = m.dim;
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    const Vec v = to_old.col(i);
    out.left.push_back(m.left_action(v));
    out.right.push_back(m.right_action(v));
  }
  return out;
}

std::vector<Mat> left_regular(const FDAlgebra& b) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < b.dim(); ++i) out.push_back(b.left_mult(i));
  return out;
}

bool is_left_module(const FDAlgebra& b, std::span<const Mat> action) {
  if (action.size() != b.dim() || action.empty()) return false;
  const std::size_t n = action.front().rows();
  Mat unit(n, n);
  for (std::size_t i = 0; i < b.dim(); ++i) unit += action[i] * b.unit()[i];
  if (unit != Mat::identity(n)) return false;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Mat p(n, n);
      const Vec prod = b.basis_product(i, j);
      for (std::size_t k = 0; k < b.dim(); ++k)
        if (sgn(prod[k]) != 0) p += action[k] * prod[k];
      if (action[i] * action[j] != p) return false;
    }
  return true;
}

}  // namespace repsmooth
