#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "repsmooth/presentation.hpp"

namespace repsmooth {

using Rng = std::mt19937_64;

// Random unit lower-triangular times unit upper-triangular integer matrix
// (determinant 1, so the inverse is integral as well).
Mat random_unimodular(Rng& rng, std::size_t n, int range = 2);
RepPoint conjugate(const RepPoint& x, const Mat& p);
RepPoint random_conjugate(Rng& rng, const RepPoint& x);
RepPoint direct_sum(const RepPoint& a, const RepPoint& b);

// Nilpotent Jordan matrix with the given block sizes.
Mat jordan_nilpotent(const std::vector<std::size_t>& blocks);
// Partitions of n into parts of size at most `max_part`, largest parts first.
std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_part);

// A parametric family of points together with special points lying in its
// closure. Generic samples use the seeded generator only.
struct PointSampler {
  std::string name;
  std::vector<std::uint32_t> dims;  // supported n
  // Family label of a generic sample; points of one label share a closure.
  std::function<RepPoint(Rng&, std::uint32_t n, std::string& family)> generic;
  // Special points and the family whose closure contains them.
  std::function<std::vector<std::pair<std::string, RepPoint>>(std::uint32_t n)> special;
};

PointSampler free_sampler(std::uint32_t m);
PointSampler commuting_sampler();
PointSampler nilpotent_sampler(std::uint32_t power);  // points of <x | x^power>
PointSampler sl2_sampler();                          // direct sums of irreps, conjugated

// Looks up a sampler by name ("free-m", "commuting", "nilpotent-r", "sl2-irreps").
PointSampler sampler_by_name(const std::string& name);

}  // namespace repsmooth
