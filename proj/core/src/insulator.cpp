#include "hyptube/insulator.hpp"

#include <algorithm>

#include "hyptube/thresholds.hpp"

namespace hyptube {

InsulatorFamily build_family(const LiftSet& lifts, double cutoff, double tol) {
  InsulatorFamily family{lifts.base.first(), lifts.base.second(), {}, {}};
  const OrthoSpectrum spectrum = ortho_spectrum(lifts, cutoff, kAllDepths, tol);
  family.issues = spectrum.issues;
  for (const OrthoEntry& e : spectrum.entries) {
    try {
      family.members.push_back(
          {midplane(lifts.base, lifts.lifts[e.index].geodesic, tol), e.distance, e.word, e.index});
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::SharedEndpoint && err.kind() != ErrorKind::IntersectingLines) {
        throw;
      }
      family.issues.push_back({e.index, err.kind()});
    }
  }
  return family;
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Noncoalesceable: return "noncoalesceable";
    case VerdictKind::Coalescing: return "coalescing";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

const char* to_string(VerdictBasis basis) {
  switch (basis) {
    case VerdictBasis::TubeShortcut: return "tube-shortcut";
    case VerdictBasis::ExhaustiveTriples: return "exhaustive-triples";
    case VerdictBasis::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

Verdict noncoalesceable(const InsulatorFamily& family, std::size_t budget,
                        const CoalescenceOptions& options) {
  Verdict verdict;
  const auto& members = family.members;

  if (options.allow_shortcut) {
    const bool wide = std::all_of(members.begin(), members.end(), [&](const InsulatorMember& m) {
      return 0.5 * m.ortho.d > thresholds::kLog3Half + options.tol;
    });
    if (wide) {
      verdict.kind = VerdictKind::Noncoalesceable;
      verdict.basis = VerdictBasis::TubeShortcut;
      return verdict;
    }
  }

  const std::size_t n = members.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        if (verdict.triples_tested == budget) {
          verdict.kind = VerdictKind::Inconclusive;
          verdict.basis = VerdictBasis::BudgetExhausted;
          return verdict;
        }
        ++verdict.triples_tested;
        SeparationResult result;
        try {
          result = triple_separates(members[i].circle, members[j].circle, members[k].circle,
                                    family.p_plus, family.p_minus, options.tol,
                                    options.tangency_tol);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PointOnCircle) throw;
          ++verdict.degenerate_tests;
          continue;
        }
        verdict.near_tangencies += result.near_tangency;
        if (result.separates) {
          verdict.kind = VerdictKind::Coalescing;
          verdict.basis = VerdictBasis::ExhaustiveTriples;
          verdict.triple = {i, j, k};
          return verdict;
        }
      }
    }
  }
  verdict.kind = VerdictKind::Noncoalesceable;
  verdict.basis = VerdictBasis::ExhaustiveTriples;
  return verdict;
}

}  // namespace hyptube
