#pragma once

// Word enumeration in a group, lifts of a closed geodesic and their ortholengths.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyptube/circle.hpp"
#include "hyptube/error.hpp"
#include "hyptube/hcore.hpp"
#include "hyptube/word.hpp"

namespace hyptube {

struct Generator {
  char name;  // lowercase letter; the uppercase letter names the inverse
  Isometry matrix;
};

class GroupPresentation {
 public:
  /// Throws InvalidArgument for a name that is not a lowercase ASCII letter
  /// and DuplicateName for a repeated name.
  void add_generator(char name, const Isometry& matrix);

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  /// Generator names in index order.
  std::string names() const;

  /// Throws UnknownGenerator.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const { return w.to_string(names()); }

  Isometry element(const Word& w) const;
  Isometry letter(int letter) const;

  /// Every generator replaced by h·g·h⁻¹.
  GroupPresentation conjugated(const Isometry& h) const;

 private:
  std::vector<Generator> generators_;
};

struct Element {
  Isometry matrix;
  Word word;
};

struct EnumerationDiagnostics {
  // Pairs (w, v) where w was found to equal the earlier word v; v empty means
  // w is a relator. Only the first kMaxRecorded are kept.
  static constexpr std::size_t kMaxRecorded = 64;
  std::vector<std::pair<Word, Word>> relations;
  std::size_t collisions = 0;
  double max_entry = 1.0;
  bool conditioning_warning = false;  // some entry exceeded 1e12
};

struct ElementBall {
  std::vector<Element> elements;  // canonical order: word length, then lexicographic
  EnumerationDiagnostics diagnostics;
  int max_length = 0;
};

/// Breadth-first ball of radius `maxlen` in the word metric, deduplicated as
/// elements of PSL(2, C). Each element keeps its first shortest word.
ElementBall enumerate_elements(const GroupPresentation& group, int maxlen,
                               double tol = kDefaultTol);

struct Lift {
  Geodesic geodesic;
  Word word;      // the lift is word · base
  int depth = 0;  // word length at which the lift first appeared
};

struct LiftSet {
  Geodesic base;
  std::vector<Lift> lifts;  // lifts[0] is the base itself
  int horizon = 0;
  Isometry core;
  Word core_word;
  EnumerationDiagnostics enumeration;
  std::size_t stabilizer_count = 0;  // enumerated elements that fix base
  // Minimum of d(x₀, g·x₀) over the words of length exactly `horizon`, where
  // x₀ is a point on base; empty at horizon 0.
  std::optional<double> frontier_displacement;

  /// A lift set assembled from explicit geodesics (words left empty).
  static LiftSet from_geodesics(const Geodesic& base, const std::vector<Geodesic>& others,
                                int horizon = 0, const std::vector<int>& depths = {});
};

/// Throws NotLoxodromic when `delta` does not name a loxodromic element.
LiftSet lifts_of_geodesic(const GroupPresentation& group, const Word& delta, int maxlen,
                          double tol = kDefaultTol);

struct OrthoEntry {
  std::size_t index;  // into LiftSet::lifts
  ComplexDistance distance;
  Word word;
};

struct LiftIssue {
  std::size_t index;
  ErrorKind kind;  // SharedEndpoint or IntersectingLines
};

struct OrthoSpectrum {
  std::vector<OrthoEntry> entries;  // ascending real part, then word, then index
  std::vector<LiftIssue> issues;
};

inline constexpr int kAllDepths = std::numeric_limits<int>::max();

/// Orthodistances from the base to every other lift with real part ≤ cutoff.
/// Restricting to `max_depth` reproduces the spectrum of a shorter horizon.
OrthoSpectrum ortho_spectrum(const LiftSet& lifts, double cutoff, int max_depth = kAllDepths,
                             double tol = kDefaultTol);

struct TubeRadius {
  std::optional<double> radius;  // empty: unbounded within the horizon
  std::optional<OrthoEntry> witness;
  int horizon = 0;

  bool unbounded() const { return !radius.has_value(); }
};

/// Half the smallest orthodistance from the base to another lift. An upper
/// bound for the true tube radius, exact once the horizon is large enough.
TubeRadius tube_radius(const LiftSet& lifts, double tol = kDefaultTol);

enum class TubeVerdict { Holds, Fails, Inconclusive };

const char* to_string(TubeVerdict v);

struct TubeCheck {
  TubeVerdict verdict = TubeVerdict::Inconclusive;
  TubeRadius radius;
  bool stable = false;           // spectrum within cutoff unchanged from horizon − 1
  bool degenerate_lifts = false; // some lift meets or is asymptotic to the base
};

/// Whether the embedded tube about the geodesic has radius (log 3)/2.
///
/// Fails when the radius is below (log 3)/2 − tol or some lift meets the base
/// (possibly at infinity). Holds when the radius exceeds (log 3)/2 + tol and
/// the set of distinct orthodistances up to `cutoff` is the same at horizons
/// n − 1 and n. Inconclusive otherwise, including at horizon 0.
TubeCheck check_log3_tube(const LiftSet& lifts, double cutoff = 4.0, double tol = kDefaultTol);

/// Indices j whose midplane with the base bounds a face of the Dirichlet tube
/// domain around the base. Points of each midplane are sampled around the
/// foot of the common perpendicular; a reported face is certain up to
/// tolerance, but a face whose visible part falls between samples is missed.
/// Needs at least two lifts and samples ≥ 100.
std::vector<std::size_t> tube_domain_faces(const LiftSet& lifts, int samples,
                                           double tol = kDefaultTol);

}  // namespace hyptube
