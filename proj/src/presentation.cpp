#include "repsmooth/presentation.hpp"

#include "repsmooth/error.hpp"

namespace repsmooth {

AlgebraPresentation AlgebraPresentation::parse(std::string name, std::uint32_t m,
                                               std::span<const std::string> relations) {
  AlgebraPresentation a{std::move(name), m, {}};
  for (const auto& r : relations) a.relations.push_back(NCPoly::parse(r, m));
  return a;
}

AlgebraPresentation AlgebraPresentation::free(std::uint32_t m) {
  return {"free-" + std::to_string(m), m, {}};
}

bool AlgebraPresentation::is_free() const {
  for (const auto& r : relations)
    if (!r.is_zero()) return false;
  return true;
}

void AlgebraPresentation::validate() const {
  for (std::size_t k = 0; k < relations.size(); ++k)
    if (relations[k].generators() != m)
      throw ValidationError("relation " + std::to_string(k) + " uses a different generator count");
}

RepPoint::RepPoint(std::vector<Mat> mats) : mats_(std::move(mats)) {
  if (mats_.empty()) return;
  n_ = mats_.front().rows();
  for (const auto& x : mats_)
    if (x.rows() != n_ || x.cols() != n_) throw DimensionMismatch("representation matrices must all be n x n");
}

RepPoint RepPoint::zero(std::size_t m, std::size_t n) { return RepPoint(std::vector<Mat>(m, Mat(n, n))); }

}  // namespace repsmooth
