#include "repsmooth/analysis.hpp"

#include <algorithm>

#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"
#include "repsmooth/repscheme.hpp"
#include "repsmooth/resolution.hpp"

namespace repsmooth {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::RegularCertified: return "REGULAR-CERTIFIED";
    case Verdict::SingularEvidence: return "SINGULAR-EVIDENCE";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

CatalogEntry entry_for_presentation(const AlgebraPresentation& a) {
  a.validate();
  CatalogEntry e;
  e.name = a.name;
  e.kind = "presentation";
  e.presentation = a;
  e.resolution = fox_resolution(a);
  return e;
}

namespace {

bool pairwise_commute(const RepPoint& x) {
  for (std::size_t i = 0; i < x.m(); ++i)
    for (std::size_t j = i + 1; j < x.m(); ++j)
      if (!commutator(x[i], x[j]).is_zero()) return false;
  return true;
}

bool wanted(const AnalysisOptions& opt, Backend b) { return !opt.only || *opt.only == b; }

}  // namespace

PointAnalysis analyze_point(const CatalogEntry& e, const RepPoint& x, const AnalysisOptions& opt) {
  if (!e.presentation) throw ValidationError(e.name + " is not a presented algebra");
  const AlgebraPresentation& a = *e.presentation;
  require_point(a, x);
  const std::size_t n = x.n();
  PointAnalysis out;
  out.algebra = e.name;
  out.point = x;
  out.ambient = a.m * n * n;
  const CommIdealPresentation v = build_vn(a, static_cast<std::uint32_t>(n));
  out.generators = v.generators.size();
  out.nonzero_generators = v.nonzero_count();
  out.jacobian_rank = jacobian_rank(v, x);
  out.tangent_jacobian = jacobian_tangent_dim(v, x);
  out.tangent_derivations = tangent_dim_via_derivations(a, x);
  out.e0 = ext0(a, x).dim;
  out.e1 = ext1(a, x);
  out.euler_holds = out.tangent_jacobian == n * n - out.e0 + out.e1 && out.tangent_jacobian == out.tangent_derivations;

  if (e.koszul_vars && wanted(opt, Backend::Koszul)) {
    if (pairwise_commute(x))
      out.backends.push_back(koszul_report(x));
    else
      out.skipped.push_back("koszul: generators do not commute at this point");
  }
  if (e.lie && wanted(opt, Backend::CE)) out.backends.push_back(ce_report(*e.lie, x));
  if (e.fd_model && wanted(opt, Backend::Bar)) {
    std::vector<Mat> rho;
    for (const auto& w : e.fd_model->basis_words) rho.push_back(evaluate(w, x.span()));
    try {
      out.backends.push_back(bar_report(e.fd_model->algebra, Bimodule::endomorphisms(rho), opt.budget));
    } catch (const BudgetExceeded& ex) {
      out.skipped.push_back(std::string("bar: ") + ex.what());
    }
  }
  if (e.resolution && wanted(opt, Backend::Resolution)) {
    out.backends.push_back(ext2_resolution(*e.resolution, a, x));
    if (!out.backends.back().e2) out.skipped.push_back("resolution: F2 unknown for " + e.resolution->name);
  }

  if (e.sampler && opt.reference_samples > 0) {
    const PointSampler s = sampler_by_name(*e.sampler);
    if (std::find(s.dims.begin(), s.dims.end(), n) != s.dims.end()) {
      Rng rng(opt.seed);
      std::string family;
      for (std::size_t k = 0; k < opt.reference_samples; ++k)
        out.reference_tangents.push_back(jacobian_tangent_dim(v, s.generic(rng, static_cast<std::uint32_t>(n), family)));
    }
  }

  const CohomologyReport* vanishing = nullptr;
  const CohomologyReport* positive = nullptr;
  for (const auto& r : out.backends) {
    if (!r.e2) continue;
    if (*r.e2 == 0 && !vanishing) vanishing = &r;
    if (*r.e2 > 0 && !positive) positive = &r;
  }
  const bool zero_ideal = out.nonzero_generators == 0;
  if (vanishing) {
    out.verdict = Verdict::RegularCertified;
    out.verdict_basis = "Ext2 = 0 via " + backend_name(vanishing->backend);
  } else if (zero_ideal) {
    out.verdict = Verdict::RegularCertified;
    out.verdict_basis = "all ideal generators vanish identically; Rep is affine space of dimension " +
                        std::to_string(out.ambient);
  } else if (!out.reference_tangents.empty() &&
             out.tangent_jacobian > *std::max_element(out.reference_tangents.begin(), out.reference_tangents.end())) {
    out.verdict = Verdict::SingularEvidence;
    out.verdict_basis = "tangent dim " + std::to_string(out.tangent_jacobian) + " exceeds every sampled generic tangent dim";
  } else {
    out.verdict = Verdict::Undecided;
    out.verdict_basis = positive ? "Ext2 = " + std::to_string(*positive->e2) + " via " + backend_name(positive->backend) +
                                       " and no singularity evidence"
                                 : "no Ext2 backend decides this point";
  }
  if (out.verdict == Verdict::RegularCertified && positive) {
    out.embedding = "strict: Harr2 = 0 at this regular point while Ext2 = " + std::to_string(*positive->e2) + " via " +
                    backend_name(positive->backend);
  } else if (vanishing) {
    out.embedding = "Harr2 embeds in Ext2 = 0";
  } else {
    out.embedding = "undetermined";
  }
  return out;
}

}  // namespace repsmooth
