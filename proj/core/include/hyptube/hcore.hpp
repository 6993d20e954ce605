#pragma once

// Exact-formula primitives for the upper half-space model of hyperbolic
// 3-space and its boundary, the Riemann sphere C ∪ {∞}.
//
// Boundary points are carried in homogeneous coordinates (z : w) so that ∞ is
// an ordinary value; affine numbers appear only when a caller asks for them.

#include <array>
#include <complex>
#include <numbers>
#include <optional>
#include <utility>

namespace hyptube {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;
// Orthodistances below this are treated as intersecting lines.
inline constexpr double kIntersectionTol = 1e-9;

/// A point of the Riemann sphere in homogeneous coordinates (z : w).
class IdealPoint {
 public:
  /// Throws InvalidArgument when both coordinates vanish.
  IdealPoint(Complex z, Complex w);

  static IdealPoint finite(Complex z) { return IdealPoint(z, Complex(1.0, 0.0)); }
  static IdealPoint infinity() { return IdealPoint(Complex(1.0, 0.0), Complex(0.0, 0.0)); }

  Complex z() const { return z_; }
  Complex w() const { return w_; }

  /// Rescaled so that max(|z|, |w|) = 1.
  IdealPoint normalized() const;
  bool is_infinity(double tol = kDefaultTol) const;
  /// z / w. Throws InvalidArgument at ∞.
  Complex affine() const;
  /// Unit vector on S² under inverse stereographic projection (∞ ↦ north pole).
  std::array<double, 3> to_sphere() const;
  static IdealPoint from_sphere(const std::array<double, 3>& x);

  bool approx_equal(const IdealPoint& other, double tol = kDefaultTol) const;

 private:
  Complex z_;
  Complex w_;
};

/// z₁w₂ − z₂w₁; zero iff the points coincide.
Complex bracket(const IdealPoint& p, const IdealPoint& q);

/// Chordal distance on the unit sphere, in [0, 2].
double chordal_distance(const IdealPoint& p, const IdealPoint& q);

/// Point of upper half-space: horizontal coordinate z, height t > 0.
struct HPoint {
  Complex z;
  double t;

  HPoint(Complex z_, double t_);
};

double hyperbolic_distance(const HPoint& x, const HPoint& y);

enum class IsometryKind { Identity, Elliptic, Parabolic, Loxodromic };

const char* to_string(IsometryKind kind);

/// Element of PSL(2, C), stored as a determinant-one matrix [[a, b], [c, d]].
class Isometry {
 public:
  Isometry();  // identity

  /// Divides by the square root of ad − bc with nonnegative real part
  /// (positive imaginary part on ties). Throws DegenerateMatrix when the
  /// determinant is (numerically) zero.
  static Isometry from_entries(Complex a, Complex b, Complex c, Complex d);

  Complex a() const { return m_[0]; }
  Complex b() const { return m_[1]; }
  Complex c() const { return m_[2]; }
  Complex d() const { return m_[3]; }
  const std::array<Complex, 4>& entries() const { return m_; }

  Complex trace() const { return m_[0] + m_[3]; }
  Complex determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  double max_abs_entry() const;

  Isometry operator*(const Isometry& rhs) const;
  Isometry inverse() const;

  /// Equality in PSL(2, C): entries agree for one of the two signs, with the
  /// tolerance scaled by max(1, largest entry modulus).
  bool approx_equal(const Isometry& other, double tol = kDefaultTol) const;

 private:
  explicit Isometry(const std::array<Complex, 4>& m) : m_(m) {}
  std::array<Complex, 4> m_;
};

IdealPoint mobius_apply(const Isometry& g, const IdealPoint& p);
HPoint mobius_apply(const Isometry& g, const HPoint& x);

IsometryKind classify(const Isometry& g, double tol = kDefaultTol);

/// Complex number d + iθ with d ≥ 0 and θ ∈ (−π, π].
struct ComplexDistance {
  double d = 0.0;
  double theta = 0.0;

  ComplexDistance() = default;
  ComplexDistance(double d_, double theta_);
};

double normalize_angle(double theta);

/// Unordered pair of distinct boundary points, stored in canonical order:
/// finite points before ∞, finite points lexicographically by (Re, Im).
class Geodesic {
 public:
  /// Throws DegenerateGeodesic when the endpoints coincide.
  Geodesic(const IdealPoint& p, const IdealPoint& q);

  const IdealPoint& first() const { return ends_[0]; }
  const IdealPoint& second() const { return ends_[1]; }
  const std::array<IdealPoint, 2>& endpoints() const { return ends_; }

  bool has_endpoint(const IdealPoint& p, double tol = kDefaultTol) const;
  bool approx_equal(const Geodesic& other, double tol = kDefaultTol) const;
  bool shares_endpoint(const Geodesic& other, double tol = kDefaultTol) const;

 private:
  std::array<IdealPoint, 2> ends_;
};

Geodesic mobius_apply(const Isometry& g, const Geodesic& gamma);

/// Complex translation length of a loxodromic element: 2 cosh(L/2) = ±tr g.
/// Throws NotLoxodromic otherwise.
ComplexDistance complex_length(const Isometry& g, double tol = kDefaultTol);

/// The geodesic joining the two fixed points of a loxodromic element.
Geodesic axis(const Isometry& g, double tol = kDefaultTol);

/// The order-two rotation about a geodesic.
Isometry half_turn(const Geodesic& gamma);

/// An isometry taking ∞ to p and 0 to q (the columns are p and q).
Isometry frame(const IdealPoint& p, const IdealPoint& q);

// Complex distance between two lines, from the cross-ratio of their
// endpoints. The real part is the length of the common perpendicular; a zero
// real part with nonzero θ means the lines cross at angle θ. Lines are
// oriented first → second in canonical order and θ is the principal value of
// 2·artanh of the square root of the cross-ratio, so only the real part is
// independent of that convention.
// Throws SharedEndpoint for asymptotic lines.
ComplexDistance orthodistance(const Geodesic& g1, const Geodesic& g2, double tol = kDefaultTol);

/// Normal form of a pair of disjoint, non-asymptotic lines: the inverse of
/// `from_standard` maps their common perpendicular onto the vertical axis
/// (0, ∞), with g1 crossing it at height `height1` and g2 at `height2`.
struct PerpendicularFrame {
  Isometry from_standard;  // standard position → original position
  double height1;
  double height2;
  ComplexDistance distance;
};

/// Throws SharedEndpoint or IntersectingLines.
PerpendicularFrame perpendicular_frame(const Geodesic& g1, const Geodesic& g2,
                                       double tol = kDefaultTol);

/// Feet of the common perpendicular, on g1 and g2 respectively.
/// Throws SharedEndpoint or IntersectingLines.
std::pair<HPoint, HPoint> orthocurve_feet(const Geodesic& g1, const Geodesic& g2,
                                          double tol = kDefaultTol);

double dist_point_geodesic(const HPoint& x, const Geodesic& gamma);

/// Angle subtended at a point of the hyperbolic plane by a full geodesic at
/// distance d from it: 2·arcsin(1/cosh d).
double visual_angle(double d);

}  // namespace hyptube
