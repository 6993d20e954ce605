#include "hyptube/arrangement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "hyptube/error.hpp"

namespace hyptube {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kAngleTieTol = 1e-9;
constexpr int kChartCandidates = 96;

struct SpherePlane {
  std::array<double, 3> normal;
  double offset;  // circle is {y : normal·y = offset}
};

// Stereographic image of the circle A|ζ|² + 2Re(B̄ζ) + D = 0.
SpherePlane sphere_plane(const CircleOnSphere& c) {
  const double a = c.coeff_a(), d = c.coeff_d();
  const Complex b = c.coeff_b();
  std::array<double, 3> n = {2.0 * b.real(), 2.0 * b.imag(), a - d};
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  for (double& x : n) x /= len;
  return {n, -(a + d) / len};
}

double angular_distance_to_circle(const SpherePlane& plane, const std::array<double, 3>& x) {
  const double dot = plane.normal[0] * x[0] + plane.normal[1] * x[1] + plane.normal[2] * x[2];
  return std::abs(std::acos(std::clamp(dot, -1.0, 1.0)) -
                  std::acos(std::clamp(plane.offset, -1.0, 1.0)));
}

double angle_between(const std::array<double, 3>& x, const std::array<double, 3>& y) {
  const double dot = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

// Unitary Möbius map sending the point farthest (over a Fibonacci lattice)
// from every circle and every avoided point to ∞.
Isometry choose_chart(std::span<const CircleOnSphere> circles, std::span<const IdealPoint> avoid) {
  std::vector<SpherePlane> planes;
  for (const CircleOnSphere& c : circles) planes.push_back(sphere_plane(c));
  std::vector<std::array<double, 3>> avoided;
  for (const IdealPoint& p : avoid) avoided.push_back(p.to_sphere());

  const double golden = kPi * (3.0 - std::sqrt(5.0));
  double best_score = -1.0;
  std::array<double, 3> best{0.0, 0.0, 1.0};
  for (int k = 0; k < kChartCandidates; ++k) {
    const double y = 1.0 - 2.0 * (k + 0.5) / kChartCandidates;
    const double r = std::sqrt(1.0 - y * y);
    const std::array<double, 3> x = {r * std::cos(golden * k), r * std::sin(golden * k), y};
    double score = kPi;
    for (const SpherePlane& plane : planes) score = std::min(score, angular_distance_to_circle(plane, x));
    for (const auto& a : avoided) score = std::min(score, angle_between(x, a));
    if (score > best_score) {
      best_score = score;
      best = x;
    }
  }
  const IdealPoint p = IdealPoint::from_sphere(best);
  const double n = std::sqrt(std::norm(p.z()) + std::norm(p.w()));
  const Complex z = p.z() / n, w = p.w() / n;
  return Isometry::from_entries(std::conj(z), std::conj(w), -w, z);
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Arrangement::Arrangement(std::span<const CircleOnSphere> circles, std::span<const IdealPoint> avoid,
                         double tangency_tol) {
  for (const CircleOnSphere& c : circles) {
    const bool seen = std::any_of(originals_.begin(), originals_.end(),
                                  [&](const CircleOnSphere& o) { return o.approx_equal(c); });
    if (!seen) originals_.push_back(c);
  }
  chart_ = choose_chart(originals_, avoid);
  for (const CircleOnSphere& c : originals_) {
    const CircleOnSphere image = mobius_apply(chart_, c);
    if (image.is_line(0.0)) throw Error(ErrorKind::Internal, "chart sends a circle through ∞");
    circles_.push_back({image.center(), image.radius()});
  }

  const std::size_t n = circles_.size();
  std::vector<std::vector<std::pair<double, std::size_t>>> incidences(n);
  UnionFind components(n);

  auto add_vertex = [&](Complex pos) {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (std::abs(vertices_[v].position - pos) <= 1e-9 * std::max(1.0, std::abs(pos))) return v;
    }
    vertices_.push_back({pos, 0});
    return vertices_.size() - 1;
  };
  auto incident = [&](std::size_t circle, std::size_t v) {
    const ChartCircle& c = circles_[circle];
    incidences[circle].emplace_back(wrap_angle(std::arg(vertices_[v].position - c.center)), v);
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const ChartCircle& c1 = circles_[i];
      const ChartCircle& c2 = circles_[j];
      const Complex delta = c2.center - c1.center;
      const double d = std::abs(delta);
      if (d == 0.0) continue;  // concentric, distinct radii
      const double r1 = c1.radius, r2 = c2.radius;
      const double sum = r1 + r2, diff = r1 - r2;
      const double disc = (sum * sum - d * d) * (d * d - diff * diff) / (sum * sum * sum * sum);
      if (disc < -tangency_tol) continue;
      const Complex u = delta / d;
      const double along = std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d), -r1, r1);
      const Complex foot = c1.center + along * u;
      std::vector<Complex> points;
      if (disc <= tangency_tol) {
        near_tangency_ = true;
        points.push_back(foot);
      } else {
        const double h = std::sqrt(std::max(0.0, r1 * r1 - along * along));
        points.push_back(foot + Complex(0.0, h) * u);
        points.push_back(foot - Complex(0.0, h) * u);
      }
      for (const Complex& pt : points) {
        const std::size_t v = add_vertex(pt);
        incident(i, v);
        incident(j, v);
      }
      components.unite(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!incidences[i].empty()) continue;
    vertices_.push_back({circles_[i].center + circles_[i].radius, 0});
    incident(i, vertices_.size() - 1);
  }

  // Compact component labels in circle order.
  std::vector<std::size_t> label(n, n);
  circle_component_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = components.find(i);
    if (label[root] == n) label[root] = component_count_++;
    circle_component_[i] = label[root];
  }

  // Arcs between consecutive incidences, counterclockwise.
  for (std::size_t i = 0; i < n; ++i) {
    auto& inc = incidences[i];
    std::sort(inc.begin(), inc.end());
    inc.erase(std::unique(inc.begin(), inc.end(),
                          [](const auto& l, const auto& r) { return l.second == r.second; }),
              inc.end());
    for (const auto& [angle, v] : inc) vertices_[v].component = circle_component_[i];
    const std::size_t m = inc.size();
    for (std::size_t k = 0; k < m; ++k) {
      const auto& [start, from] = inc[k];
      const auto& [end, to] = inc[(k + 1) % m];
      const double sweep = (m == 1) ? kTwoPi : (k + 1 < m ? end - start : end + kTwoPi - start);
      arcs_.push_back({i, from, to, start, sweep});
    }
  }

  // Outgoing half-edges around each vertex in counterclockwise order of
  // tangent direction; equal directions (tangencies) are ordered by signed
  // curvature, since the edge bending left lies counterclockwise.
  struct Outgoing {
    double angle;
    double curvature;
    std::size_t half_edge;
  };
  std::vector<std::vector<Outgoing>> around(vertices_.size());
  auto direction = [](double a) {
    a = wrap_angle(a);
    return a > kTwoPi - kAngleTieTol ? a - kTwoPi : a;
  };
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    const Arc& arc = arcs_[a];
    const double k = 1.0 / circles_[arc.circle].radius;
    around[arc.from].push_back({direction(arc.start + 0.5 * kPi), k, 2 * a});
    around[arc.to].push_back({direction(arc.start + arc.sweep - 0.5 * kPi), -k, 2 * a + 1});
  }
  std::vector<std::size_t> slot(2 * arcs_.size());
  for (auto& list : around) {
    std::sort(list.begin(), list.end(), [](const Outgoing& l, const Outgoing& r) {
      if (std::abs(l.angle - r.angle) > kAngleTieTol) return l.angle < r.angle;
      return l.curvature < r.curvature;
    });
    for (std::size_t s = 0; s < list.size(); ++s) slot[list[s].half_edge] = s;
  }

  auto head = [&](std::size_t he) {
    const Arc& arc = arcs_[he / 2];
    return he % 2 == 0 ? arc.to : arc.from;
  };
  // The face on the left continues along the outgoing edge just clockwise of
  // the reversed edge.
  auto next = [&](std::size_t he) {
    const auto& list = around[head(he)];
    const std::size_t twin = he ^ 1u;
    return list[(slot[twin] + list.size() - 1) % list.size()].half_edge;
  };

  std::vector<bool> used(2 * arcs_.size(), false);
  for (std::size_t start = 0; start < used.size(); ++start) {
    if (used[start]) continue;
    Face face{circle_component_[arcs_[start / 2].circle], {}, 0.0};
    std::size_t he = start;
    do {
      used[he] = true;
      face.boundary.push_back(he);
      const Arc& arc = arcs_[he / 2];
      const ChartCircle& c = circles_[arc.circle];
      const Complex chord = std::polar(1.0, arc.start + arc.sweep) - std::polar(1.0, arc.start);
      const double term =
          0.5 * ((c.radius * std::conj(c.center) * chord).imag() + c.radius * c.radius * arc.sweep);
      face.signed_area += he % 2 == 0 ? term : -term;
      he = next(he);
      if (face.boundary.size() > used.size()) {
        throw Error(ErrorKind::Internal, "face traversal did not close");
      }
    } while (he != start);
    faces_.push_back(std::move(face));
  }
}

std::size_t Arrangement::global_face_count() const {
  return faces_.size() - component_count_ + 1;
}

int Arrangement::euler_characteristic(std::size_t component) const {
  int v = 0, e = 0, f = 0;
  for (const Vertex& x : vertices_) v += x.component == component;
  for (const Arc& a : arcs_) e += circle_component_[a.circle] == component;
  for (const Face& x : faces_) f += x.component == component;
  return v - e + f;
}

std::vector<std::pair<std::size_t, std::size_t>> Arrangement::face_adjacency() const {
  std::vector<std::size_t> face_of(2 * arcs_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (std::size_t he : faces_[f].boundary) face_of[he] = f;
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < arcs_.size(); ++a) out.emplace_back(face_of[2 * a], face_of[2 * a + 1]);
  return out;
}

// Winding number of the face boundary about p, accumulated arc by arc. Each
// arc is cut into pieces of at most a quarter turn; a piece changes arg(z − p)
// by the chord's angle, plus a full turn when p sits in the circular segment
// between chord and arc.
double Arrangement::winding(const Face& face, Complex p) const {
  double total = 0.0;
  for (std::size_t he : face.boundary) {
    const Arc& arc = arcs_[he / 2];
    const ChartCircle& c = circles_[arc.circle];
    const bool inside = std::abs(p - c.center) < c.radius;
    const int pieces = std::max(1, static_cast<int>(std::ceil(arc.sweep / (0.5 * kPi))));
    const double step = arc.sweep / pieces;
    double sweep = 0.0;
    for (int k = 0; k < pieces; ++k) {
      const Complex a = c.center + c.radius * std::polar(1.0, arc.start + k * step) - p;
      const Complex b = c.center + c.radius * std::polar(1.0, arc.start + (k + 1) * step) - p;
      const Complex ratio = std::conj(a) * b;
      const double chord = std::atan2(ratio.imag(), ratio.real());
      if (inside && ratio.imag() <= 0.0) {
        sweep += kTwoPi - std::abs(chord);
      } else {
        sweep += chord;
      }
    }
    total += he % 2 == 0 ? sweep : -sweep;
  }
  return total / kTwoPi;
}

std::vector<std::size_t> Arrangement::locate(const IdealPoint& p, double tol) const {
  for (const CircleOnSphere& c : originals_) {
    if (c.contains(p, tol)) throw Error(ErrorKind::PointOnCircle, "query point lies on a circle");
  }
  const IdealPoint q = mobius_apply(chart_, p);
  const bool at_infinity = std::abs(q.w()) < 1e-12;
  std::vector<std::size_t> out(component_count_, faces_.size());
  std::vector<std::size_t> outer(component_count_, faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const Face& face = faces_[f];
    if (face.signed_area < 0.0) {
      outer[face.component] = f;
      continue;
    }
    if (at_infinity) continue;
    if (std::lround(winding(face, q.affine())) == 1) {
      if (out[face.component] != faces_.size()) {
        throw Error(ErrorKind::Internal, "point located in two faces");
      }
      out[face.component] = f;
    }
  }
  for (std::size_t k = 0; k < component_count_; ++k) {
    if (out[k] == faces_.size()) out[k] = outer[k];
  }
  return out;
}

SeparationResult separates_union(std::span<const CircleOnSphere> circles, const IdealPoint& p,
                                 const IdealPoint& q, double tol, double tangency_tol) {
  const std::array<IdealPoint, 2> avoid = {p, q};
  const Arrangement arrangement(circles, avoid, tangency_tol);
  SeparationResult out;
  out.near_tangency = arrangement.near_tangency();
  out.separates = arrangement.locate(p, tol) != arrangement.locate(q, tol);
  return out;
}

SeparationResult triple_separates(const CircleOnSphere& c1, const CircleOnSphere& c2,
                                  const CircleOnSphere& c3, const IdealPoint& p,
                                  const IdealPoint& q, double tol, double tangency_tol) {
  const std::array<CircleOnSphere, 3> circles = {c1, c2, c3};
  return separates_union(circles, p, q, tol, tangency_tol);
}

}  // namespace hyptube
