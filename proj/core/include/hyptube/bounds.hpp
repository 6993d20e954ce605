#pragma once

// Length thresholds for the (log 3)/2 tube and the combined hypothesis report.

#include <optional>
#include <string>
#include <vector>

#include "hyptube/insulator.hpp"
#include "hyptube/lifts.hpp"
#include "hyptube/thresholds.hpp"

namespace hyptube {

/// `length` must be that of a shortest geodesic (not checked). Strict: true
/// iff length > 1.353.
bool long_geodesic_guarantee(double length);

enum class ShortSource { Meyerhoff, GehringMartin };

const char* to_string(ShortSource source);

/// Strict: true iff length < 0.0978 (Meyerhoff) or < 0.19 (Gehring–Martin).
bool short_geodesic_guarantee(double length, ShortSource source);

struct ReportParams {
  int max_word_length = 6;
  double cutoff = 4.0;
  std::size_t budget = kDefaultTripleBudget;
  double tol = kDefaultTol;
};

enum class Conclusion { HypothesisHolds, NotEstablished };

const char* to_string(Conclusion c);

struct HypothesisReport {
  std::string geodesic_word;
  ReportParams params;

  ComplexDistance core_length;
  std::size_t lift_count = 0;
  std::size_t stabilizer_count = 0;
  std::size_t relation_count = 0;
  bool conditioning_warning = false;
  std::optional<double> frontier_displacement;

  TubeCheck tube;
  std::string tube_witness_word;  // empty when unbounded

  bool long_guarantee = false;
  bool meyerhoff_guarantee = false;
  bool gehring_martin_guarantee = false;

  std::size_t family_size = 0;
  std::size_t family_issues = 0;
  Verdict insulator;
  std::vector<std::string> coalescing_words;  // the separating triple, when found

  Conclusion conclusion = Conclusion::NotEstablished;
  std::vector<std::string> assumptions;
};

/// Combines the tube check, the threshold predicates and the insulator
/// verdict for the geodesic named by `delta`. Throws NotLoxodromic.
HypothesisReport hypothesis_report(const GroupPresentation& group, const Word& delta,
                                   const ReportParams& params = {});

/// The same report from precomputed pieces; lets tests inject a family.
/// Throws Internal if a holding tube check meets a coalescing family.
HypothesisReport assemble_report(const GroupPresentation& group, const LiftSet& lifts,
                                 const InsulatorFamily& family, const ReportParams& params);

}  // namespace hyptube
