#pragma once

#include "hyptube/hcore.hpp"

#include <vector>

namespace hyptube {

/// A circle of the Riemann sphere: an ordinary circle in C, or a line
/// (a circle through ∞).
///
/// Stored as the Hermitian form
///   A|z|² + B·z̄·w + B̄·z·w̄ + D|w|²  =  0
/// scaled so that |B|² − AD = 1. The form's sign picks out one of the two
/// complementary disks; it is carried along under Möbius maps but plays no
/// role in equality.
class CircleOnSphere {
 public:
  /// |z − center| = radius. Throws InvalidArgument unless radius > 0.
  static CircleOnSphere circle(Complex center, double radius);
  /// Re(n̄·z) = offset, with n normalized to unit length. Throws on n = 0.
  static CircleOnSphere line(Complex normal, double offset);
  /// Throws InvalidArgument unless |B|² − AD > 0.
  static CircleOnSphere from_hermitian(double a, Complex b, double d);

  double coeff_a() const { return a_; }
  Complex coeff_b() const { return b_; }
  double coeff_d() const { return d_; }

  bool is_line(double tol = kDefaultTol) const;
  /// Circle form accessors. Throw InvalidArgument for lines.
  Complex center() const;
  double radius() const;
  /// Line form accessors. Throw InvalidArgument for proper circles.
  Complex normal() const;
  double offset() const;

  /// Value of the Hermitian form at p with (z, w) scaled to unit length.
  /// Lies in [−1, 1] and vanishes exactly on the circle.
  double side(const IdealPoint& p) const;
  bool contains(const IdealPoint& p, double tol = kDefaultTol) const;

  /// Reflection (inversion) in the circle.
  IdealPoint reflect(const IdealPoint& p) const;

  /// Points evenly spaced along the circle.
  std::vector<IdealPoint> sample(int count) const;

  /// Same point set, within tolerance on the normalized form.
  bool approx_equal(const CircleOnSphere& other, double tol = kDefaultTol) const;

 private:
  CircleOnSphere(double a, Complex b, double d) : a_(a), b_(b), d_(d) {}
  double a_;
  Complex b_;
  double d_;
};

CircleOnSphere mobius_apply(const Isometry& g, const CircleOnSphere& c);

/// Boundary circle of the plane orthogonal to the common perpendicular of g1
/// and g2 through its hyperbolic midpoint.
/// Throws SharedEndpoint, or IntersectingLines when the lines are closer than
/// kIntersectionTol.
CircleOnSphere midplane(const Geodesic& g1, const Geodesic& g2, double tol = kDefaultTol);

/// True iff p and q lie in different components of the sphere minus c.
/// Throws PointOnCircle.
bool separates(const CircleOnSphere& c, const IdealPoint& p, const IdealPoint& q,
               double tol = kDefaultTol);

/// Signed value of the circle's Hermitian form extended to upper half-space:
/// A(|z|² + t²) + 2Re(B·z̄) + D. Zero on the hemisphere (or vertical
/// half-plane) bounded by the circle; its sign tells the side.
double plane_side(const CircleOnSphere& c, const HPoint& x);

}  // namespace hyptube
