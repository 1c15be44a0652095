#include "repsmooth/scan.hpp"

#include <algorithm>
#include <set>

#include "repsmooth/deform.hpp"
#include "repsmooth/error.hpp"

namespace repsmooth {

namespace {

ScanRecord measure(const CatalogEntry& e, const RepPoint& x, const ScanConfig& config) {
  AnalysisOptions opt;
  opt.only = config.backend;
  opt.budget = config.budget;
  opt.reference_samples = 0;
  const PointAnalysis a = analyze_point(e, x, opt);
  ScanRecord r;
  r.point = x;
  r.tangent = a.tangent_jacobian;
  r.tangent_derivations = a.tangent_derivations;
  r.e0 = a.e0;
  r.e1 = a.e1;
  r.verdict = a.verdict;
  for (const auto& b : a.backends) {
    if (!r.z1 && b.z1) {
      r.z1 = b.z1;
      r.z2 = b.z2;
    }
    if (!r.e2 && b.e2) {
      r.e2 = b.e2;
      r.e2_backend = backend_name(b.backend);
    }
  }
  if (config.lift_order > 0) {
    std::uint32_t reached = config.lift_order;
    for (const auto& v : tangent_vectors(*e.presentation, x).basis) {
      const auto res = integrate(*e.presentation, x, as_matrices(v, x.m(), x.n()), config.lift_order);
      reached = std::min(reached, res.achieved_order);
    }
    r.lift_order = reached;
  }
  return r;
}

}  // namespace

ScanReport scan(const CatalogEntry& e, const ScanConfig& config) {
  if (!e.presentation) throw ValidationError(e.name + " is not a presented algebra");
  if (!e.sampler) throw SamplerExhausted(e.name + " has no point sampler");
  const PointSampler s = sampler_by_name(*e.sampler);
  if (std::find(s.dims.begin(), s.dims.end(), config.n) == s.dims.end())
    throw SamplerExhausted("sampler " + s.name + " does not produce points of dimension " + std::to_string(config.n));
  ScanReport out;
  out.algebra = e.name;
  out.sampler = s.name;
  out.config = config;
  Rng rng(config.seed);
  for (std::size_t k = 0; k < config.samples; ++k) {
    std::string family;
    const RepPoint x = s.generic(rng, config.n, family);
    ScanRecord r = measure(e, x, config);
    r.index = out.records.size();
    r.family = family;
    out.records.push_back(std::move(r));
  }
  if (config.include_special)
    for (const auto& [family, x] : s.special(config.n)) {
      ScanRecord r = measure(e, x, config);
      r.index = out.records.size();
      r.family = family;
      r.special = true;
      out.records.push_back(std::move(r));
    }

  std::map<std::size_t, std::pair<std::size_t, std::set<std::string>>> strata;
  std::map<std::string, std::size_t> generic_min;
  for (const auto& r : out.records) {
    auto& s2 = strata[r.tangent];
    ++s2.first;
    s2.second.insert(r.family);
    if (!r.special) {
      auto it = generic_min.find(r.family);
      if (it == generic_min.end())
        generic_min.emplace(r.family, r.tangent);
      else
        it->second = std::min(it->second, r.tangent);
    }
  }
  for (const auto& [t, v] : strata) out.strata.push_back({t, v.first, {v.second.begin(), v.second.end()}});
  for (const auto& r : out.records) {
    if (!r.special) continue;
    const auto it = generic_min.find(r.family);
    if (it != generic_min.end() && r.tangent < it->second)
      out.violations.push_back({r.index, r.family, r.tangent, it->second});
  }
  return out;
}

std::string strata_csv(const ScanReport& r) {
  std::string out = "tangent,count,families\n";
  for (const auto& s : r.strata) {
    std::string fam;
    for (std::size_t k = 0; k < s.families.size(); ++k) fam += (k ? ";" : "") + s.families[k];
    out += std::to_string(s.tangent) + "," + std::to_string(s.count) + ",\"" + fam + "\"\n";
  }
  return out;
}

}  // namespace repsmooth
