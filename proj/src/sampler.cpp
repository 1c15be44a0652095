#include "repsmooth/sampler.hpp"

#include <algorithm>

#include "repsmooth/error.hpp"
#include "repsmooth/lie.hpp"
#include "repsmooth/linalg.hpp"

namespace repsmooth {

namespace {

Rational draw(Rng& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  return Rational(d(rng));
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "+" : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

Mat random_unimodular(Rng& rng, std::size_t n, int range) {
  Mat lo = Mat::identity(n);
  Mat up = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lo(i, j) = draw(rng, range);
      up(j, i) = draw(rng, range);
    }
  return lo * up;
}

RepPoint conjugate(const RepPoint& x, const Mat& p) {
  const auto p_inv = inverse(p);
  if (!p_inv) throw ValidationError("conjugating matrix is singular");
  std::vector<Mat> out;
  for (const auto& m : x.mats()) out.push_back(p * m * *p_inv);
  return RepPoint(std::move(out));
}

RepPoint random_conjugate(Rng& rng, const RepPoint& x) { return conjugate(x, random_unimodular(rng, x.n())); }

RepPoint direct_sum(const RepPoint& a, const RepPoint& b) {
  if (a.m() != b.m()) throw DimensionMismatch("direct sum of points with different generator counts");
  std::vector<Mat> out;
  const std::size_t n = a.n() + b.n();
  for (std::size_t l = 0; l < a.m(); ++l) {
    Mat s(n, n);
    for (std::size_t i = 0; i < a.n(); ++i)
      for (std::size_t j = 0; j < a.n(); ++j) s(i, j) = a[l](i, j);
    for (std::size_t i = 0; i < b.n(); ++i)
      for (std::size_t j = 0; j < b.n(); ++j) s(a.n() + i, a.n() + j) = b[l](i, j);
    out.push_back(std::move(s));
  }
  return RepPoint(std::move(out));
}

Mat jordan_nilpotent(const std::vector<std::size_t>& blocks) {
  std::size_t n = 0;
  for (auto b : blocks) n += b;
  Mat j(n, n);
  std::size_t off = 0;
  for (auto b : blocks) {
    for (std::size_t k = 0; k + 1 < b; ++k) j(off + k, off + k + 1) = 1;
    off += b;
  }
  return j;
}

std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_part) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left, std::size_t cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part);
  return out;
}

PointSampler free_sampler(std::uint32_t m) {
  PointSampler s;
  s.name = "free-" + std::to_string(m);
  s.dims = {1, 2, 3};
  s.generic = [m](Rng& rng, std::uint32_t n, std::string& family) {
    family = "all";
    std::vector<Mat> mats;
    for (std::uint32_t l = 0; l < m; ++l) {
      Mat x(n, n);
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) x(i, j) = draw(rng, 3);
      mats.push_back(std::move(x));
    }
    return RepPoint(std::move(mats));
  };
  s.special = [m](std::uint32_t n) {
    return std::vector<std::pair<std::string, RepPoint>>{{"all", RepPoint::zero(m, n)}};
  };
  return s;
}

PointSampler commuting_sampler() {
  PointSampler s;
  s.name = "commuting";
  s.dims = {1, 2, 3};
  s.generic = [](Rng& rng, std::uint32_t n, std::string& family) {
    family = "diagonalizable";
    // X1 with distinct eigenvalues so the pair is a generic commuting pair.
    std::vector<Rational> a, b;
    std::vector<int> pool;
    for (int v = -4; v <= 4; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::uint32_t i = 0; i < n; ++i) {
      a.emplace_back(pool[i]);
      b.push_back(draw(rng, 4));
    }
    return random_conjugate(rng, RepPoint({Mat::diagonal(a), Mat::diagonal(b)}));
  };
  s.special = [](std::uint32_t n) {
    std::vector<std::pair<std::string, RepPoint>> out;
    out.emplace_back("diagonalizable", RepPoint::zero(2, n));
    if (n >= 2) {
      const Mat nil = jordan_nilpotent({n});
      out.emplace_back("diagonalizable", RepPoint({nil, Mat(n, n)}));
      out.emplace_back("diagonalizable", RepPoint({nil, nil}));
      out.emplace_back("diagonalizable", RepPoint({Mat::identity(n), nil}));
      out.emplace_back("diagonalizable", RepPoint({nil, nil * nil}));
    }
    return out;
  };
  return s;
}

PointSampler nilpotent_sampler(std::uint32_t power) {
  PointSampler s;
  s.name = "nilpotent-" + std::to_string(power);
  s.dims = {1, 2, 3};
  // Every Jordan type with blocks <= power lies in the closure of the orbit
  // of the largest such type.
  s.generic = [power](Rng& rng, std::uint32_t n, std::string& family) {
    const auto top = partitions(n, power).front();
    family = "orbit-closure(" + join(top) + ")";
    return random_conjugate(rng, RepPoint({jordan_nilpotent(top)}));
  };
  s.special = [power](std::uint32_t n) {
    const auto all = partitions(n, power);
    std::vector<std::pair<std::string, RepPoint>> out;
    for (std::size_t k = 1; k < all.size(); ++k)
      out.emplace_back("orbit-closure(" + join(all.front()) + ")", RepPoint({jordan_nilpotent(all[k])}));
    return out;
  };
  return s;
}

PointSampler sl2_sampler() {
  PointSampler s;
  s.name = "sl2-irreps";
  s.dims = {1, 2, 3, 4};
  s.generic = [](Rng& rng, std::uint32_t n, std::string& family) {
    const auto all = partitions(n, n);
    const auto& parts = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    family = "sum(" + join(parts) + ")";
    RepPoint x(sl2_irrep(parts.front()));
    for (std::size_t k = 1; k < parts.size(); ++k) x = direct_sum(x, RepPoint(sl2_irrep(parts[k])));
    return random_conjugate(rng, x);
  };
  s.special = [](std::uint32_t) { return std::vector<std::pair<std::string, RepPoint>>{}; };
  return s;
}

PointSampler sampler_by_name(const std::string& name) {
  if (name.rfind("free-", 0) == 0) return free_sampler(static_cast<std::uint32_t>(std::stoul(name.substr(5))));
  if (name == "commuting") return commuting_sampler();
  if (name.rfind("nilpotent-", 0) == 0)
    return nilpotent_sampler(static_cast<std::uint32_t>(std::stoul(name.substr(10))));
  if (name == "sl2-irreps") return sl2_sampler();
  throw UnknownEntry("no sampler named '" + name + "'");
}

}  // namespace repsmooth
