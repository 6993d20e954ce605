#include "hyptube/circle.hpp"

#include <algorithm>
#include <cmath>

#include "hyptube/error.hpp"

namespace hyptube {

namespace {

using Mat2 = std::array<Complex, 4>;  // row-major [[0, 1], [2, 3]]

Mat2 mul(const Mat2& l, const Mat2& r) {
  return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3], l[2] * r[0] + l[3] * r[2],
          l[2] * r[1] + l[3] * r[3]};
}

Mat2 adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

}  // namespace

CircleOnSphere CircleOnSphere::circle(Complex center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::InvalidArgument, "circle radius must be positive");
  }
  return CircleOnSphere(1.0 / radius, -center / radius,
                        (std::norm(center) - radius * radius) / radius);
}

CircleOnSphere CircleOnSphere::line(Complex normal, double offset) {
  const double n = std::abs(normal);
  if (!(n > 0.0)) throw Error(ErrorKind::InvalidArgument, "line normal must be nonzero");
  return CircleOnSphere(0.0, normal / n, -2.0 * offset);
}

CircleOnSphere CircleOnSphere::from_hermitian(double a, Complex b, double d) {
  const double k = std::norm(b) - a * d;
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorKind::InvalidArgument, "Hermitian form does not define a circle");
  }
  const double s = 1.0 / std::sqrt(k);
  return CircleOnSphere(a * s, b * s, d * s);
}

bool CircleOnSphere::is_line(double tol) const { return std::abs(a_) <= tol; }

Complex CircleOnSphere::center() const {
  if (is_line(0.0)) throw Error(ErrorKind::InvalidArgument, "line has no center");
  return -b_ / a_;
}

double CircleOnSphere::radius() const {
  if (is_line(0.0)) throw Error(ErrorKind::InvalidArgument, "line has no radius");
  return 1.0 / std::abs(a_);
}

Complex CircleOnSphere::normal() const {
  if (!is_line()) throw Error(ErrorKind::InvalidArgument, "circle is not a line");
  return b_ / std::abs(b_);
}

double CircleOnSphere::offset() const {
  if (!is_line()) throw Error(ErrorKind::InvalidArgument, "circle is not a line");
  return -d_ / (2.0 * std::abs(b_));
}

double CircleOnSphere::side(const IdealPoint& p) const {
  const double n = std::sqrt(std::norm(p.z()) + std::norm(p.w()));
  const Complex z = p.z() / n, w = p.w() / n;
  const double value =
      a_ * std::norm(z) + 2.0 * (b_ * std::conj(z) * w).real() + d_ * std::norm(w);
  const double frob = std::sqrt(a_ * a_ + 2.0 * std::norm(b_) + d_ * d_);
  return value / frob;
}

bool CircleOnSphere::contains(const IdealPoint& p, double tol) const {
  return std::abs(side(p)) <= tol;
}

IdealPoint CircleOnSphere::reflect(const IdealPoint& p) const {
  const Complex zb = std::conj(p.z()), wb = std::conj(p.w());
  return IdealPoint(-b_ * zb - d_ * wb, a_ * zb + std::conj(b_) * wb).normalized();
}

std::vector<IdealPoint> CircleOnSphere::sample(int count) const {
  std::vector<IdealPoint> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    const double phi = 2.0 * std::numbers::pi * (k + 0.5) / count;
    if (is_line(0.0)) {
      const Complex n = normal();
      const double x = -1.0 / std::tan(0.5 * phi);
      out.push_back(IdealPoint::finite(n * Complex(offset(), x)));
    } else {
      out.push_back(IdealPoint::finite(center() + radius() * std::polar(1.0, phi)));
    }
  }
  return out;
}

bool CircleOnSphere::approx_equal(const CircleOnSphere& other, double tol) const {
  const double scale =
      std::max({1.0, std::abs(a_), std::abs(b_), std::abs(d_), std::abs(other.a_),
                std::abs(other.b_), std::abs(other.d_)});
  const double plus = std::max({std::abs(a_ - other.a_), std::abs(b_ - other.b_),
                                std::abs(d_ - other.d_)});
  const double minus = std::max({std::abs(a_ + other.a_), std::abs(b_ + other.b_),
                                 std::abs(d_ + other.d_)});
  return std::min(plus, minus) <= tol * scale;
}

CircleOnSphere mobius_apply(const Isometry& g, const CircleOnSphere& c) {
  // Points transform as v ↦ g v, so the form transforms as H ↦ (g⁻¹)* H g⁻¹.
  const Mat2 inv = g.inverse().entries();
  const Mat2 h = {Complex(c.coeff_a()), c.coeff_b(), std::conj(c.coeff_b()), Complex(c.coeff_d())};
  const Mat2 out = mul(adjoint(inv), mul(h, inv));
  return CircleOnSphere::from_hermitian(out[0].real(), out[1], out[3].real());
}

CircleOnSphere midplane(const Geodesic& g1, const Geodesic& g2, double tol) {
  const PerpendicularFrame f = perpendicular_frame(g1, g2, tol);
  const double rho = std::sqrt(f.height1 * f.height2);
  return mobius_apply(f.from_standard, CircleOnSphere::circle(0.0, rho));
}

bool separates(const CircleOnSphere& c, const IdealPoint& p, const IdealPoint& q, double tol) {
  const double sp = c.side(p), sq = c.side(q);
  if (std::abs(sp) <= tol || std::abs(sq) <= tol) {
    throw Error(ErrorKind::PointOnCircle, "point lies on the circle");
  }
  return (sp < 0.0) != (sq < 0.0);
}

double plane_side(const CircleOnSphere& c, const HPoint& x) {
  return c.coeff_a() * (std::norm(x.z) + x.t * x.t) + 2.0 * (c.coeff_b() * std::conj(x.z)).real() +
         c.coeff_d();
}

}  // namespace hyptube
