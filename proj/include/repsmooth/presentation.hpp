#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "repsmooth/ncpoly.hpp"

namespace repsmooth {

// A = k{x1..xm} / (relations). The relation list is a finite generating set
// of the two-sided ideal; membership in the ideal is never decided.
struct AlgebraPresentation {
  std::string name;
  std::uint32_t m = 0;
  std::vector<NCPoly> relations;

  static AlgebraPresentation parse(std::string name, std::uint32_t m, std::span<const std::string> relations);
  static AlgebraPresentation free(std::uint32_t m);

  bool is_free() const;
  // Throws ValidationError when a relation was built for another generator count.
  void validate() const;
};

// A tuple of m square matrices of a common size n.
class RepPoint {
 public:
  RepPoint() = default;
  explicit RepPoint(std::vector<Mat> mats);

  std::size_t n() const { return n_; }
  std::size_t m() const { return mats_.size(); }
  const std::vector<Mat>& mats() const { return mats_; }
  std::span<const Mat> span() const { return mats_; }
  const Mat& operator[](std::size_t l) const { return mats_[l]; }

  static RepPoint zero(std::size_t m, std::size_t n);

  friend bool operator==(const RepPoint&, const RepPoint&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Mat> mats_;
};

}  // namespace repsmooth
