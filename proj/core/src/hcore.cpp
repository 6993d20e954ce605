#include "hyptube/hcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyptube/error.hpp"

namespace hyptube {

namespace {

constexpr double kPi = std::numbers::pi;

// Square root branch used for matrix normalization.
Complex principal_root(Complex x) {
  Complex s = std::sqrt(x);
  if (s.real() < 0.0 || (s.real() == 0.0 && s.imag() < 0.0)) s = -s;
  return s;
}

// Eigenvector of g for eigenvalue e, as a boundary point. Of the two
// candidate rows of (g − e) we keep the better conditioned one.
IdealPoint eigenpoint(const Isometry& g, Complex e) {
  const Complex v1z = g.b(), v1w = e - g.a();
  const Complex v2z = e - g.d(), v2w = g.c();
  const double n1 = std::norm(v1z) + std::norm(v1w);
  const double n2 = std::norm(v2z) + std::norm(v2w);
  if (n1 >= n2) return IdealPoint(v1z, v1w).normalized();
  return IdealPoint(v2z, v2w).normalized();
}

// Both eigenvalues, larger modulus first; avoids the cancellation in
// (tr − sqrt(tr² − 4)) / 2 by taking the reciprocal.
std::pair<Complex, Complex> eigenvalues(const Isometry& g) {
  const Complex tr = g.trace();
  const Complex s = std::sqrt(tr * tr - 4.0);
  Complex big = 0.5 * (tr + s);
  const Complex other = 0.5 * (tr - s);
  if (std::abs(other) > std::abs(big)) big = other;
  return {big, 1.0 / big};
}

}  // namespace

// ---------------------------------------------------------------------------
// IdealPoint

IdealPoint::IdealPoint(Complex z, Complex w) : z_(z), w_(w) {
  if (z == Complex(0.0) && w == Complex(0.0)) {
    throw Error(ErrorKind::InvalidArgument, "ideal point (0 : 0)");
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(w.real()) ||
      !std::isfinite(w.imag())) {
    throw Error(ErrorKind::InvalidArgument, "ideal point with non-finite coordinates");
  }
}

IdealPoint IdealPoint::normalized() const {
  const double s = std::max(std::abs(z_), std::abs(w_));
  return IdealPoint(z_ / s, w_ / s);
}

bool IdealPoint::is_infinity(double tol) const { return std::abs(normalized().w_) <= tol; }

Complex IdealPoint::affine() const {
  if (w_ == Complex(0.0)) throw Error(ErrorKind::InvalidArgument, "affine value of ∞");
  return z_ / w_;
}

std::array<double, 3> IdealPoint::to_sphere() const {
  const IdealPoint p = normalized();
  const Complex zw = p.z_ * std::conj(p.w_);
  const double nz = std::norm(p.z_), nw = std::norm(p.w_);
  const double s = nz + nw;
  return {2.0 * zw.real() / s, 2.0 * zw.imag() / s, (nz - nw) / s};
}

IdealPoint IdealPoint::from_sphere(const std::array<double, 3>& x) {
  const Complex xy(x[0], x[1]);
  if (x[2] <= 0.0) return IdealPoint(xy, Complex(1.0 - x[2])).normalized();
  return IdealPoint(Complex(1.0 + x[2]), std::conj(xy)).normalized();
}

bool IdealPoint::approx_equal(const IdealPoint& other, double tol) const {
  return std::abs(bracket(normalized(), other.normalized())) <= tol;
}

Complex bracket(const IdealPoint& p, const IdealPoint& q) { return p.z() * q.w() - q.z() * p.w(); }

double chordal_distance(const IdealPoint& p, const IdealPoint& q) {
  const double np = std::sqrt(std::norm(p.z()) + std::norm(p.w()));
  const double nq = std::sqrt(std::norm(q.z()) + std::norm(q.w()));
  return 2.0 * std::abs(bracket(p, q)) / (np * nq);
}

// ---------------------------------------------------------------------------
// HPoint

HPoint::HPoint(Complex z_, double t_) : z(z_), t(t_) {
  if (!(t_ > 0.0) || !std::isfinite(t_)) {
    throw Error(ErrorKind::InvalidArgument, "upper half-space point needs height t > 0");
  }
}

double hyperbolic_distance(const HPoint& x, const HPoint& y) {
  const double dz = std::abs(x.z - y.z);
  const double dt = x.t - y.t;
  return 2.0 * std::asinh(std::hypot(dz, dt) / (2.0 * std::sqrt(x.t * y.t)));
}

// ---------------------------------------------------------------------------
// Isometry

const char* to_string(IsometryKind kind) {
  switch (kind) {
    case IsometryKind::Identity: return "identity";
    case IsometryKind::Elliptic: return "elliptic";
    case IsometryKind::Parabolic: return "parabolic";
    case IsometryKind::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

Isometry::Isometry() : m_{Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)} {}

Isometry Isometry::from_entries(Complex a, Complex b, Complex c, Complex d) {
  const Complex det = a * d - b * c;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!std::isfinite(std::abs(det)) || !(std::abs(det) > 1e-15 * scale * scale)) {
    throw Error(ErrorKind::DegenerateMatrix, "matrix determinant is zero");
  }
  const Complex root = principal_root(det);
  return Isometry({a / root, b / root, c / root, d / root});
}

double Isometry::max_abs_entry() const {
  double m = 0.0;
  for (const Complex& e : m_) m = std::max(m, std::abs(e));
  return m;
}

Isometry Isometry::operator*(const Isometry& rhs) const {
  const auto& l = m_;
  const auto& r = rhs.m_;
  return from_entries(l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
                      l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]);
}

Isometry Isometry::inverse() const { return Isometry({m_[3], -m_[1], -m_[2], m_[0]}); }

bool Isometry::approx_equal(const Isometry& other, double tol) const {
  const double scale = std::max({1.0, max_abs_entry(), other.max_abs_entry()});
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(m_[i] - other.m_[i]));
    minus = std::max(minus, std::abs(m_[i] + other.m_[i]));
  }
  return std::min(plus, minus) <= tol * scale;
}

IdealPoint mobius_apply(const Isometry& g, const IdealPoint& p) {
  return IdealPoint(g.a() * p.z() + g.b() * p.w(), g.c() * p.z() + g.d() * p.w()).normalized();
}

HPoint mobius_apply(const Isometry& g, const HPoint& x) {
  const Complex czd = g.c() * x.z + g.d();
  const double t2 = x.t * x.t;
  const double denom = std::norm(czd) + std::norm(g.c()) * t2;
  const Complex z = ((g.a() * x.z + g.b()) * std::conj(czd) + g.a() * std::conj(g.c()) * t2) / denom;
  return HPoint(z, x.t / denom);
}

IsometryKind classify(const Isometry& g, double tol) {
  if (g.approx_equal(Isometry(), tol)) return IsometryKind::Identity;
  const Complex tr = g.trace();
  const Complex tr2 = tr * tr;
  const double scaled = tol * std::max(1.0, std::abs(tr2));
  if (std::abs(tr2 - 4.0) <= scaled) return IsometryKind::Parabolic;
  if (std::abs(tr2.imag()) <= scaled && tr2.real() >= -scaled && tr2.real() < 4.0) {
    return IsometryKind::Elliptic;
  }
  return IsometryKind::Loxodromic;
}

// ---------------------------------------------------------------------------
// ComplexDistance

double normalize_angle(double theta) {
  double r = std::remainder(theta, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

ComplexDistance::ComplexDistance(double d_, double theta_) : d(d_), theta(normalize_angle(theta_)) {
  if (d_ < 0.0) {
    if (d_ < -1e-12) throw Error(ErrorKind::InvalidArgument, "negative complex distance");
    d = 0.0;
  }
}

// ---------------------------------------------------------------------------
// Geodesic

namespace {

bool canonical_less(const IdealPoint& p, const IdealPoint& q) {
  const bool pinf = p.is_infinity(0.0), qinf = q.is_infinity(0.0);
  if (pinf != qinf) return qinf;
  if (pinf) return false;
  const Complex a = p.affine(), b = q.affine();
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

Geodesic::Geodesic(const IdealPoint& p, const IdealPoint& q)
    : ends_{p.normalized(), q.normalized()} {
  if (ends_[0].approx_equal(ends_[1], 1e-12)) {
    throw Error(ErrorKind::DegenerateGeodesic, "geodesic endpoints coincide");
  }
  if (canonical_less(ends_[1], ends_[0])) std::swap(ends_[0], ends_[1]);
}

bool Geodesic::has_endpoint(const IdealPoint& p, double tol) const {
  return ends_[0].approx_equal(p, tol) || ends_[1].approx_equal(p, tol);
}

bool Geodesic::approx_equal(const Geodesic& other, double tol) const {
  const auto& o = other.ends_;
  return (ends_[0].approx_equal(o[0], tol) && ends_[1].approx_equal(o[1], tol)) ||
         (ends_[0].approx_equal(o[1], tol) && ends_[1].approx_equal(o[0], tol));
}

bool Geodesic::shares_endpoint(const Geodesic& other, double tol) const {
  return has_endpoint(other.ends_[0], tol) || has_endpoint(other.ends_[1], tol);
}

Geodesic mobius_apply(const Isometry& g, const Geodesic& gamma) {
  return Geodesic(mobius_apply(g, gamma.first()), mobius_apply(g, gamma.second()));
}

// ---------------------------------------------------------------------------
// Loxodromic data

ComplexDistance complex_length(const Isometry& g, double tol) {
  const IsometryKind kind = classify(g, tol);
  if (kind != IsometryKind::Loxodromic) {
    throw Error(ErrorKind::NotLoxodromic, std::string("element is ") + to_string(kind));
  }
  const Complex lambda = eigenvalues(g).first;
  return ComplexDistance(2.0 * std::log(std::abs(lambda)), 2.0 * std::arg(lambda));
}

Geodesic axis(const Isometry& g, double tol) {
  const IsometryKind kind = classify(g, tol);
  if (kind != IsometryKind::Loxodromic) {
    throw Error(ErrorKind::NotLoxodromic, std::string("element is ") + to_string(kind));
  }
  const auto [big, small] = eigenvalues(g);
  return Geodesic(eigenpoint(g, big), eigenpoint(g, small));
}

Isometry frame(const IdealPoint& p, const IdealPoint& q) {
  return Isometry::from_entries(p.z(), q.z(), p.w(), q.w());
}

Isometry half_turn(const Geodesic& gamma) {
  const Isometry m = frame(gamma.first(), gamma.second());
  const Complex i(0.0, 1.0);
  const Isometry rot = Isometry::from_entries(i, 0.0, 0.0, -i);
  return m * rot * m.inverse();
}

ComplexDistance orthodistance(const Geodesic& g1, const Geodesic& g2, double tol) {
  if (g1.shares_endpoint(g2, tol)) {
    throw Error(ErrorKind::SharedEndpoint, "lines are asymptotic");
  }
  const IdealPoint& u1 = g1.first();
  const IdealPoint& v1 = g1.second();
  const IdealPoint& u2 = g2.first();
  const IdealPoint& v2 = g2.second();
  // Standard position (−1, 1) vs (−e^σ, e^σ) has this cross-ratio equal to
  // tanh²(σ/2).
  const Complex cr = (bracket(u1, u2) * bracket(v1, v2)) / (bracket(u1, v2) * bracket(v1, u2));
  Complex sigma = 2.0 * std::atanh(std::sqrt(cr));
  if (sigma.real() < 0.0) sigma = -sigma;
  return ComplexDistance(sigma.real(), sigma.imag());
}

PerpendicularFrame perpendicular_frame(const Geodesic& g1, const Geodesic& g2, double tol) {
  const ComplexDistance dist = orthodistance(g1, g2, tol);
  if (dist.d < kIntersectionTol) {
    throw Error(ErrorKind::IntersectingLines, "lines meet; no common perpendicular");
  }
  // The product of the half-turns about the two lines translates along their
  // common perpendicular.
  const Isometry t = half_turn(g1) * half_turn(g2);
  const auto [big, small] = eigenvalues(t);
  const Isometry from_standard = frame(eigenpoint(t, big), eigenpoint(t, small));
  const Isometry to_standard = from_standard.inverse();
  auto height = [&](const Geodesic& g) {
    const Complex x = mobius_apply(to_standard, g.first()).affine();
    const Complex y = mobius_apply(to_standard, g.second()).affine();
    return std::sqrt(std::abs(x) * std::abs(y));
  };
  return PerpendicularFrame{from_standard, height(g1), height(g2), dist};
}

std::pair<HPoint, HPoint> orthocurve_feet(const Geodesic& g1, const Geodesic& g2, double tol) {
  const PerpendicularFrame f = perpendicular_frame(g1, g2, tol);
  return {mobius_apply(f.from_standard, HPoint(0.0, f.height1)),
          mobius_apply(f.from_standard, HPoint(0.0, f.height2))};
}

double dist_point_geodesic(const HPoint& x, const Geodesic& gamma) {
  const Isometry to_axis = frame(gamma.first(), gamma.second()).inverse();
  const HPoint y = mobius_apply(to_axis, x);
  return std::asinh(std::abs(y.z) / y.t);
}

double visual_angle(double d) {
  if (!(d >= 0.0)) throw Error(ErrorKind::InvalidArgument, "visual angle needs d >= 0");
  return 2.0 * std::asin(1.0 / std::cosh(d));
}

}  // namespace hyptube
