#include "hyptube/bounds.hpp"

namespace hyptube {

bool long_geodesic_guarantee(double length) { return length > thresholds::kLongLength; }

const char* to_string(ShortSource source) {
  switch (source) {
    case ShortSource::Meyerhoff: return "meyerhoff";
    case ShortSource::GehringMartin: return "gehring-martin";
  }
  return "unknown";
}

bool short_geodesic_guarantee(double length, ShortSource source) {
  switch (source) {
    case ShortSource::Meyerhoff: return length < thresholds::kMeyerhoffLength;
    case ShortSource::GehringMartin: return length < thresholds::kGehringMartinLength;
  }
  return false;
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::HypothesisHolds: return "rigidity hypothesis holds (within horizon)";
    case Conclusion::NotEstablished: return "hypothesis not established";
  }
  return "unknown";
}

HypothesisReport hypothesis_report(const GroupPresentation& group, const Word& delta,
                                   const ReportParams& params) {
  const LiftSet lifts = lifts_of_geodesic(group, delta, params.max_word_length, params.tol);
  const InsulatorFamily family = build_family(lifts, params.cutoff, params.tol);
  return assemble_report(group, lifts, family, params);
}

HypothesisReport assemble_report(const GroupPresentation& group, const LiftSet& lifts,
                                 const InsulatorFamily& family, const ReportParams& params) {
  HypothesisReport r;
  r.params = params;
  r.geodesic_word = group.format_word(lifts.core_word);
  r.core_length = complex_length(lifts.core, params.tol);
  r.lift_count = lifts.lifts.size();
  r.stabilizer_count = lifts.stabilizer_count;
  r.relation_count = lifts.enumeration.collisions;
  r.conditioning_warning = lifts.enumeration.conditioning_warning;
  r.frontier_displacement = lifts.frontier_displacement;

  r.tube = check_log3_tube(lifts, params.cutoff, params.tol);
  if (r.tube.radius.witness) r.tube_witness_word = group.format_word(r.tube.radius.witness->word);

  r.long_guarantee = long_geodesic_guarantee(r.core_length.d);
  r.meyerhoff_guarantee = short_geodesic_guarantee(r.core_length.d, ShortSource::Meyerhoff);
  r.gehring_martin_guarantee = short_geodesic_guarantee(r.core_length.d, ShortSource::GehringMartin);

  r.family_size = family.members.size();
  r.family_issues = family.issues.size();
  r.insulator = noncoalesceable(family, params.budget, {true, params.tol, kTangencyTol});
  if (r.insulator.kind == VerdictKind::Coalescing) {
    for (std::size_t m : r.insulator.triple) {
      r.coalescing_words.push_back(group.format_word(family.members[m].word));
    }
  }

  // A tube wider than (log 3)/2 forces every midplane to subtend under 120°.
  if (r.tube.verdict == TubeVerdict::Holds && r.insulator.kind != VerdictKind::Noncoalesceable) {
    throw Error(ErrorKind::Internal, "tube holds but the insulator family is not noncoalesceable");
  }
  // Lifts that meet the base have no midplane, so a family with such issues
  // is incomplete and its verdict cannot carry the conclusion.
  r.conclusion = (r.tube.verdict == TubeVerdict::Holds ||
                  (r.insulator.kind == VerdictKind::Noncoalesceable && family.issues.empty()))
                     ? Conclusion::HypothesisHolds
                     : Conclusion::NotEstablished;

  r.assumptions = {
      "the word names a primitive, simple closed geodesic (not checked)",
      "lifts and group elements are enumerated only up to the word-length horizon",
      "the insulator family is checked at the base lift only; other lifts are equivalent",
      "length thresholds presume the geodesic is a shortest one (caller-asserted)",
  };
  return r;
}

}  // namespace hyptube
