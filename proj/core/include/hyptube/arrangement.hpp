#pragma once

// Cell decomposition of the sphere cut by a few circles, and the separation
// query built on it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyptube/circle.hpp"

namespace hyptube {

inline constexpr double kTangencyTol = 1e-10;

/// The arrangement of a small set of circles on the Riemann sphere.
///
/// Coincident circles are merged. Everything is computed in an affine chart
/// obtained by a rotation of the sphere that sends a point far from every
/// circle (and from the `avoid` points) to ∞, so every circle is an honest
/// circle there. Each connected component of the union of circles is built
/// as a planar graph whose faces are traced from a half-edge structure; a
/// circle meeting no other circle gets one vertex and a loop arc.
///
/// By Janiszewski's theorem two points lie in the same face of the whole
/// arrangement iff they lie in the same face of every component, so a face
/// is addressed by its tuple of per-component faces.
class Arrangement {
 public:
  struct Vertex {
    Complex position;  // chart coordinates
    std::size_t component;
  };
  struct Arc {
    std::size_t circle;  // index into chart_circles()
    std::size_t from, to;
    double start;  // angle on the circle, radians
    double sweep;  // counterclockwise extent in (0, 2π]
  };
  struct Face {
    std::size_t component;
    std::vector<std::size_t> boundary;  // half-edges: 2·arc (ccw) or 2·arc + 1 (cw)
    double signed_area;                 // negative for the unbounded face
  };
  struct ChartCircle {
    Complex center;
    double radius;
  };

  explicit Arrangement(std::span<const CircleOnSphere> circles,
                       std::span<const IdealPoint> avoid = {},
                       double tangency_tol = kTangencyTol);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<ChartCircle>& chart_circles() const { return circles_; }
  std::size_t component_count() const { return component_count_; }
  /// The chart: a unitary Möbius map applied before any computation.
  const Isometry& chart() const { return chart_; }

  /// Faces of the whole sphere: Σ(faces per component) − components + 1.
  std::size_t global_face_count() const;
  /// V − E + F restricted to one component (2 for a valid cell complex).
  int euler_characteristic(std::size_t component) const;
  /// Pairs of faces sharing an arc, per arc.
  std::vector<std::pair<std::size_t, std::size_t>> face_adjacency() const;

  bool near_tangency() const { return near_tangency_; }

  /// Face index (into faces()) containing p, one per component.
  /// Throws PointOnCircle when p is within `tol` of a circle.
  std::vector<std::size_t> locate(const IdealPoint& p, double tol = kDefaultTol) const;

 private:
  double winding(const Face& face, Complex p) const;

  Isometry chart_;
  std::vector<CircleOnSphere> originals_;
  std::vector<ChartCircle> circles_;
  std::vector<std::size_t> circle_component_;
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<Face> faces_;
  std::size_t component_count_ = 0;
  bool near_tangency_ = false;
};

struct SeparationResult {
  bool separates = false;
  bool near_tangency = false;  // two circles tangent within tolerance; topology unreliable
};

/// Whether p and q lie in different components of the sphere minus the union
/// of the given circles (at most three). Throws PointOnCircle.
SeparationResult separates_union(std::span<const CircleOnSphere> circles, const IdealPoint& p,
                                 const IdealPoint& q, double tol = kDefaultTol,
                                 double tangency_tol = kTangencyTol);

SeparationResult triple_separates(const CircleOnSphere& c1, const CircleOnSphere& c2,
                                  const CircleOnSphere& c3, const IdealPoint& p,
                                  const IdealPoint& q, double tol = kDefaultTol,
                                  double tangency_tol = kTangencyTol);

/// Raster cross-check of separates_union. The sphere is cut into a
/// latitude/longitude grid of `resolution` rows by 2·`resolution` columns in
/// a frame randomly rotated by `seed`; cells within a guard band of any circle
/// are removed and p, q are tested for grid connectivity. Returns true when
/// they are disconnected. Needs resolution ≥ 64. Throws
/// GuardBandSwallowedPoint when p or q falls inside the band.
bool flood_fill_oracle(std::span<const CircleOnSphere> circles, const IdealPoint& p,
                       const IdealPoint& q, int resolution, std::uint64_t seed);

}  // namespace hyptube
