#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repsmooth/analysis.hpp"

namespace repsmooth {

struct ScanConfig {
  std::uint32_t n = 2;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  bool include_special = true;
  // When positive, every basis tangent is integrated to this order; the
  // smallest order reached is recorded. Finite-order arcs are a heuristic
  // stand-in for formal arcs.
  std::uint32_t lift_order = 0;
  std::optional<Backend> backend;
  std::size_t budget = 0;
};

struct ScanRecord {
  std::size_t index = 0;
  std::string family;
  bool special = false;
  RepPoint point;
  std::size_t tangent = 0;
  std::size_t tangent_derivations = 0;
  std::size_t e0 = 0;
  std::size_t e1 = 0;
  std::optional<std::size_t> e2;
  std::string e2_backend;
  std::optional<std::size_t> z1;
  std::optional<std::size_t> z2;
  std::optional<std::uint32_t> lift_order;
  Verdict verdict = Verdict::Undecided;
};

struct Stratum {
  std::size_t tangent = 0;
  std::size_t count = 0;
  std::vector<std::string> families;  // sorted, distinct
};

// A point in the closure of a family with smaller tangent dimension than
// the family's generic samples.
struct SemicontinuityViolation {
  std::size_t index = 0;
  std::string family;
  std::size_t tangent = 0;
  std::size_t generic_min = 0;
};

struct ScanReport {
  std::string algebra;
  std::string sampler;
  ScanConfig config;
  std::vector<ScanRecord> records;
  std::vector<Stratum> strata;  // ascending tangent dim
  std::vector<SemicontinuityViolation> violations;
};

// Throws SamplerExhausted when the entry has no sampler for n.
ScanReport scan(const CatalogEntry& e, const ScanConfig& config);

// tangent,count,families
std::string strata_csv(const ScanReport& r);

}  // namespace repsmooth
