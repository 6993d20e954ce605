#include "hyptube/lifts.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "hyptube/thresholds.hpp"

namespace hyptube {

namespace {

// Lifts are images of one axis under long products, so their endpoints carry
// more rounding than the generators do.
constexpr double kLiftMatchTol = 1e-8;
constexpr double kConditioningLimit = 1e12;
constexpr double kCell = 1e-6;

// Hash buckets keyed on a sign-invariant linear functional of the matrix, so
// that g and −g land together; neighbours are probed to absorb rounding at
// bucket edges.
class IsometryIndex {
 public:
  std::optional<std::size_t> find(const Isometry& g, const std::vector<Element>& store,
                                  double tol) const {
    const long long k = key(g);
    for (long long probe = k - 1; probe <= k + 1; ++probe) {
      auto [lo, hi] = cells_.equal_range(probe);
      for (auto it = lo; it != hi; ++it) {
        if (store[it->second].matrix.approx_equal(g, tol)) return it->second;
      }
    }
    return std::nullopt;
  }

  void insert(const Isometry& g, std::size_t index) { cells_.emplace(key(g), index); }

 private:
  static long long key(const Isometry& g) {
    static constexpr double kWeights[8] = {0.7548776662, 0.5698402910, 0.3247179572,
                                           0.2451223338, 0.8611843950, 0.1388156050,
                                           0.6180339887, 0.4142135624};
    double f = 0.0, mass = 1.0;
    for (std::size_t i = 0; i < 4; ++i) {
      const Complex e = g.entries()[i];
      const Complex sq = e * e;
      f += kWeights[2 * i] * sq.real() + kWeights[2 * i + 1] * sq.imag();
      mass += std::norm(e);
    }
    return static_cast<long long>(std::floor(f / mass / kCell));
  }

  std::unordered_multimap<long long, std::size_t> cells_;
};

class GeodesicIndex {
 public:
  bool contains(const Geodesic& g, const std::vector<Lift>& store) const {
    const long long k = key(g);
    for (long long probe = k - 1; probe <= k + 1; ++probe) {
      auto [lo, hi] = cells_.equal_range(probe);
      for (auto it = lo; it != hi; ++it) {
        if (store[it->second].geodesic.approx_equal(g, kLiftMatchTol)) return true;
      }
    }
    return false;
  }

  void insert(const Geodesic& g, std::size_t index) { cells_.emplace(key(g), index); }

 private:
  static long long key(const Geodesic& g) {
    const auto p = g.first().to_sphere();
    const auto q = g.second().to_sphere();
    const double f = 0.5698402910 * (p[0] + q[0]) + 0.3247179572 * (p[1] + q[1]) +
                     0.1388156050 * (p[2] + q[2]);
    return static_cast<long long>(std::floor(f / kCell));
  }

  std::unordered_multimap<long long, std::size_t> cells_;
};

// Letters in canonical order a, A, b, B, …
std::vector<int> alphabet(std::size_t generator_count) {
  std::vector<int> out;
  for (std::size_t k = 0; k < generator_count; ++k) {
    const int x = static_cast<int>(k) + 1;
    out.push_back(x);
    out.push_back(-x);
  }
  return out;
}

bool same_values(std::vector<double> a, std::vector<double> b, double tol) {
  auto distinct = [tol](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
      if (out.empty() || x - out.back() > tol * std::max(1.0, std::abs(x))) out.push_back(x);
    }
    return out;
  };
  const auto da = distinct(a), db = distinct(b);
  if (da.size() != db.size()) return false;
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (std::abs(da[i] - db[i]) > tol * std::max(1.0, std::abs(da[i]))) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupPresentation

void GroupPresentation::add_generator(char name, const Isometry& matrix) {
  if (!std::islower(static_cast<unsigned char>(name))) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("generator name must be a lowercase letter: ") + name);
  }
  for (const Generator& g : generators_) {
    if (g.name == name) {
      throw Error(ErrorKind::DuplicateName, std::string("generator ") + name + " declared twice");
    }
  }
  generators_.push_back({name, matrix});
}

std::string GroupPresentation::names() const {
  std::string out;
  for (const Generator& g : generators_) out.push_back(g.name);
  return out;
}

Word GroupPresentation::parse_word(std::string_view text) const {
  std::vector<int> letters;
  for (char c : text) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const bool inverse = c != lower;
    auto it = std::find_if(generators_.begin(), generators_.end(),
                           [lower](const Generator& g) { return g.name == lower; });
    if (it == generators_.end() || !std::isalpha(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::UnknownGenerator, std::string("no generator named ") + lower +
                                                   " (in word \"" + std::string(text) + "\")");
    }
    const int x = static_cast<int>(it - generators_.begin()) + 1;
    letters.push_back(inverse ? -x : x);
  }
  return Word(std::move(letters));
}

Isometry GroupPresentation::letter(int letter) const {
  const auto index = static_cast<std::size_t>(std::abs(letter) - 1);
  if (letter == 0 || index >= generators_.size()) {
    throw Error(ErrorKind::InvalidArgument, "letter out of range");
  }
  const Isometry& g = generators_[index].matrix;
  return letter > 0 ? g : g.inverse();
}

Isometry GroupPresentation::element(const Word& w) const {
  Isometry out;
  for (int x : w.letters()) out = out * letter(x);
  return out;
}

GroupPresentation GroupPresentation::conjugated(const Isometry& h) const {
  GroupPresentation out;
  const Isometry hinv = h.inverse();
  for (const Generator& g : generators_) out.generators_.push_back({g.name, h * g.matrix * hinv});
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

ElementBall enumerate_elements(const GroupPresentation& group, int maxlen, double tol) {
  if (maxlen < 0) throw Error(ErrorKind::InvalidArgument, "max word length must be >= 0");
  ElementBall ball;
  ball.max_length = maxlen;
  ball.elements.push_back({Isometry(), Word()});
  IsometryIndex index;
  index.insert(ball.elements.front().matrix, 0);

  const std::vector<int> letters = alphabet(group.size());
  std::vector<Isometry> letter_matrices;
  for (int x : letters) letter_matrices.push_back(group.letter(x));

  auto& diag = ball.diagnostics;
  std::vector<std::size_t> frontier{0};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t parent : frontier) {
      const Isometry base = ball.elements[parent].matrix;
      const Word prefix = ball.elements[parent].word;
      for (std::size_t li = 0; li < letters.size(); ++li) {
        const int x = letters[li];
        if (!prefix.empty() && prefix.letters().back() == -x) continue;
        Isometry m = base * letter_matrices[li];
        Word w = prefix * Word({x});
        if (auto hit = index.find(m, ball.elements, tol)) {
          ++diag.collisions;
          if (diag.relations.size() < EnumerationDiagnostics::kMaxRecorded) {
            diag.relations.emplace_back(w, ball.elements[*hit].word);
          }
          continue;
        }
        diag.max_entry = std::max(diag.max_entry, m.max_abs_entry());
        index.insert(m, ball.elements.size());
        next.push_back(ball.elements.size());
        ball.elements.push_back({std::move(m), std::move(w)});
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  diag.conditioning_warning = diag.max_entry > kConditioningLimit;
  return ball;
}

// ---------------------------------------------------------------------------
// Lifts

LiftSet LiftSet::from_geodesics(const Geodesic& base, const std::vector<Geodesic>& others,
                                int horizon, const std::vector<int>& depths) {
  LiftSet out{base, {}, horizon, Isometry(), Word(), {}, 0, std::nullopt};
  out.lifts.push_back({base, Word(), 0});
  for (std::size_t i = 0; i < others.size(); ++i) {
    const int depth = i < depths.size() ? depths[i] : horizon;
    out.lifts.push_back({others[i], Word(), depth});
  }
  return out;
}

LiftSet lifts_of_geodesic(const GroupPresentation& group, const Word& delta, int maxlen,
                          double tol) {
  const Isometry core = group.element(delta);
  const Geodesic base = axis(core, tol);
  const ElementBall ball = enumerate_elements(group, maxlen, tol);

  LiftSet out{base, {}, maxlen, core, delta, ball.diagnostics, 0, std::nullopt};
  out.lifts.push_back({base, Word(), 0});
  GeodesicIndex index;
  index.insert(base, 0);

  const HPoint x0 = mobius_apply(frame(base.first(), base.second()), HPoint(0.0, 1.0));
  for (const Element& e : ball.elements) {
    if (maxlen > 0 && static_cast<int>(e.word.length()) == maxlen) {
      const double disp = hyperbolic_distance(x0, mobius_apply(e.matrix, x0));
      if (!out.frontier_displacement || disp < *out.frontier_displacement) {
        out.frontier_displacement = disp;
      }
    }
    const Geodesic image = mobius_apply(e.matrix, base);
    if (image.approx_equal(base, kLiftMatchTol)) {
      ++out.stabilizer_count;
      continue;
    }
    if (index.contains(image, out.lifts)) continue;
    index.insert(image, out.lifts.size());
    out.lifts.push_back({image, e.word, static_cast<int>(e.word.length())});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum and tube radius

OrthoSpectrum ortho_spectrum(const LiftSet& lifts, double cutoff, int max_depth, double tol) {
  if (!(cutoff > 0.0)) throw Error(ErrorKind::InvalidArgument, "cutoff must be positive");
  OrthoSpectrum out;
  for (std::size_t j = 1; j < lifts.lifts.size(); ++j) {
    const Lift& lift = lifts.lifts[j];
    if (lift.depth > max_depth) continue;
    ComplexDistance dist;
    try {
      dist = orthodistance(lifts.base, lift.geodesic, tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SharedEndpoint) throw;
      out.issues.push_back({j, ErrorKind::SharedEndpoint});
      continue;
    }
    if (dist.d < kIntersectionTol) {
      out.issues.push_back({j, ErrorKind::IntersectingLines});
      continue;
    }
    if (dist.d <= cutoff) out.entries.push_back({j, dist, lift.word});
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const OrthoEntry& l, const OrthoEntry& r) {
    if (l.distance.d != r.distance.d) return l.distance.d < r.distance.d;
    if (l.word != r.word) return l.word < r.word;
    return l.index < r.index;
  });
  // Values equal within tolerance are one spectral value; order them by word
  // so that ulp noise does not decide the listing.
  auto by_word = [](const OrthoEntry& l, const OrthoEntry& r) {
    if (l.word != r.word) return l.word < r.word;
    return l.index < r.index;
  };
  for (auto run = out.entries.begin(); run != out.entries.end();) {
    const double start = run->distance.d;
    auto stop = std::find_if(run, out.entries.end(), [&](const OrthoEntry& e) {
      return e.distance.d - start > tol * std::max(1.0, start);
    });
    std::sort(run, stop, by_word);
    run = stop;
  }
  return out;
}

TubeRadius tube_radius(const LiftSet& lifts, double tol) {
  const OrthoSpectrum spectrum =
      ortho_spectrum(lifts, std::numeric_limits<double>::infinity(), kAllDepths, tol);
  TubeRadius out;
  out.horizon = lifts.horizon;
  if (!spectrum.entries.empty()) {
    double least = spectrum.entries.front().distance.d;
    for (const OrthoEntry& e : spectrum.entries) least = std::min(least, e.distance.d);
    out.radius = 0.5 * least;
    out.witness = spectrum.entries.front();
  }
  return out;
}

const char* to_string(TubeVerdict v) {
  switch (v) {
    case TubeVerdict::Holds: return "holds";
    case TubeVerdict::Fails: return "fails";
    case TubeVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

TubeCheck check_log3_tube(const LiftSet& lifts, double cutoff, double tol) {
  TubeCheck out;
  out.radius = tube_radius(lifts, tol);
  const OrthoSpectrum full =
      ortho_spectrum(lifts, std::numeric_limits<double>::infinity(), kAllDepths, tol);
  out.degenerate_lifts = !full.issues.empty();

  if (lifts.horizon >= 1) {
    auto values = [](const OrthoSpectrum& s) {
      std::vector<double> v;
      for (const OrthoEntry& e : s.entries) v.push_back(e.distance.d);
      return v;
    };
    const OrthoSpectrum now = ortho_spectrum(lifts, cutoff, kAllDepths, tol);
    const OrthoSpectrum before = ortho_spectrum(lifts, cutoff, lifts.horizon - 1, tol);
    out.stable = before.issues.size() == now.issues.size() &&
                 same_values(values(before), values(now), tol);
  }

  const double limit = thresholds::kLog3Half;
  if (out.degenerate_lifts || (out.radius.radius && *out.radius.radius < limit - tol)) {
    out.verdict = TubeVerdict::Fails;
  } else if (out.stable && (out.radius.unbounded() || *out.radius.radius > limit + tol)) {
    out.verdict = TubeVerdict::Holds;
  } else {
    out.verdict = TubeVerdict::Inconclusive;
  }
  return out;
}

std::vector<std::size_t> tube_domain_faces(const LiftSet& lifts, int samples, double tol) {
  if (lifts.lifts.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two lifts");
  if (samples < 100) throw Error(ErrorKind::InvalidArgument, "need at least 100 samples");

  struct HalfSpace {
    std::size_t index;
    PerpendicularFrame frame;
    CircleOnSphere boundary;
    double base_sign;
  };
  std::vector<HalfSpace> halves;
  for (std::size_t j = 1; j < lifts.lifts.size(); ++j) {
    try {
      PerpendicularFrame f = perpendicular_frame(lifts.base, lifts.lifts[j].geodesic, tol);
      const CircleOnSphere c = midplane(lifts.base, lifts.lifts[j].geodesic, tol);
      const double sign = c.side(lifts.base.first()) < 0.0 ? -1.0 : 1.0;
      halves.push_back({j, f, c, sign});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SharedEndpoint && e.kind() != ErrorKind::IntersectingLines) throw;
    }
  }

  // Distance from the foot of the perpendicular out to which each midplane is
  // sampled; tanh(6) is within 1e-5 of the boundary circle.
  constexpr double kReach = 6.0;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));

  auto inside_others = [&](const HPoint& x, std::size_t self) {
    for (std::size_t k = 0; k < halves.size(); ++k) {
      if (k == self) continue;
      const CircleOnSphere& c = halves[k].boundary;
      const double scale = std::abs(c.coeff_a()) * (std::norm(x.z) + x.t * x.t) +
                           2.0 * std::abs(c.coeff_b()) * std::abs(x.z) + std::abs(c.coeff_d());
      if (halves[k].base_sign * plane_side(c, x) <= tol * scale) return false;
    }
    return true;
  };

  std::vector<std::size_t> faces;
  for (std::size_t j = 0; j < halves.size(); ++j) {
    const PerpendicularFrame& f = halves[j].frame;
    const double rho = std::sqrt(f.height1 * f.height2);
    bool face = inside_others(mobius_apply(f.from_standard, HPoint(0.0, rho)), j);
    for (int i = 0; i < samples && !face; ++i) {
      const double s = kReach * std::sqrt((i + 0.5) / samples);
      const Complex dir = std::polar(1.0, golden * i);
      const HPoint local(rho * std::tanh(s) * dir, rho / std::cosh(s));
      face = inside_others(mobius_apply(f.from_standard, local), j);
    }
    if (face) faces.push_back(halves[j].index);
  }
  return faces;
}

}  // namespace hyptube
