#pragma once

// Dirichlet insulator families and the noncoalescence decision.

#include <array>
#include <cstddef>
#include <vector>

#include "hyptube/arrangement.hpp"
#include "hyptube/lifts.hpp"

namespace hyptube {

struct InsulatorMember {
  CircleOnSphere circle;  // boundary of the midplane between base and lift
  ComplexDistance ortho;
  Word word;
  std::size_t lift_index;
};

struct InsulatorFamily {
  IdealPoint p_plus;  // endpoints of the base lift
  IdealPoint p_minus;
  std::vector<InsulatorMember> members;  // ascending ortho.d
  std::vector<LiftIssue> issues;         // lifts with no midplane
};

/// One midplane circle per lift within `cutoff` of the base.
InsulatorFamily build_family(const LiftSet& lifts, double cutoff, double tol = kDefaultTol);

enum class VerdictKind { Noncoalesceable, Coalescing, Inconclusive };
enum class VerdictBasis { TubeShortcut, ExhaustiveTriples, BudgetExhausted };

const char* to_string(VerdictKind kind);
const char* to_string(VerdictBasis basis);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  VerdictBasis basis = VerdictBasis::BudgetExhausted;
  std::array<std::size_t, 3> triple{};  // member indices, i ≤ j ≤ k; set when coalescing
  std::size_t triples_tested = 0;
  std::size_t near_tangencies = 0;   // tested triples flagged near-tangent
  std::size_t degenerate_tests = 0;  // triples where a base endpoint sat on a circle
};

inline constexpr std::size_t kDefaultTripleBudget = 50000;

struct CoalescenceOptions {
  // Off in test mode, to run the exhaustive search even when the tube
  // argument already settles the question.
  bool allow_shortcut = true;
  double tol = kDefaultTol;
  double tangency_tol = kTangencyTol;
};

/// Decides whether no three members (repetition allowed) separate the base
/// endpoints.
///
/// When every member sits at distance ortho.d/2 > (log 3)/2 from the base
/// axis, each circle subtends less than 120° seen from the axis, so no three
/// can enclose an endpoint and the answer is immediate. Otherwise multisets
/// {i ≤ j ≤ k} are tested in order of increasing k, then j, then i (closest
/// midplanes first), stopping at the first separating one or after `budget`
/// tests.
Verdict noncoalesceable(const InsulatorFamily& family, std::size_t budget = kDefaultTripleBudget,
                        const CoalescenceOptions& options = {});

}  // namespace hyptube
