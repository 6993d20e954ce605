#pragma once

// Shared fixtures and independent reference computations for the tests.
// Nothing here calls into the geometry under test.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>

#include "hyptube/hcore.hpp"

namespace hyptube::testing {

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng)};
}

inline Isometry random_isometry(std::mt19937_64& rng) {
  for (;;) {
    const Complex a = random_complex(rng), b = random_complex(rng), c = random_complex(rng),
                  d = random_complex(rng);
    if (std::abs(a * d - b * c) > 0.2) return Isometry::from_entries(a, b, c, d);
  }
}

inline IdealPoint random_point(std::mt19937_64& rng, double scale = 2.0) {
  return IdealPoint::finite(random_complex(rng, scale));
}

// Point of upper half-space as (x, y, t).
struct Point3 {
  Complex z;
  double t;
};

inline double ref_distance(const Point3& p, const Point3& q) {
  const double num = std::norm(p.z - q.z) + (p.t - q.t) * (p.t - q.t);
  return std::acosh(1.0 + num / (2.0 * p.t * q.t));
}

// Arclength parametrisation of the geodesic with endpoints p and q (q may be
// infinite), written out from the half-space picture: a vertical line over p,
// or a semicircle standing on the segment pq.
struct RefGeodesic {
  Complex p;
  std::optional<Complex> q;

  Point3 at(double s) const {
    if (!q) return {p, std::exp(s)};
    const Complex c = 0.5 * (p + *q);
    const double r = 0.5 * std::abs(*q - p);
    const Complex u = (*q - p) / std::abs(*q - p);
    const double phi = 2.0 * std::atan(std::exp(s));  // arclength s ↦ angle from q
    return {c + r * std::cos(phi) * u, r * std::sin(phi)};
  }
};

// Convex in each argument along geodesics, so nested golden-section search
// converges to the global minimum.
template <class F>
double golden_min(F f, double lo, double hi, double* arg = nullptr, int iters = 120) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1; x1 = b - g * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2; x2 = a + g * (b - a); f2 = f(x2);
    }
  }
  const double x = 0.5 * (a + b);
  if (arg) *arg = x;
  return f(x);
}

struct RefPerpendicular {
  double distance;
  Point3 foot1, foot2;
};

inline RefPerpendicular ref_perpendicular(const RefGeodesic& g1, const RefGeodesic& g2,
                                          double range = 40.0) {
  double best_s = 0.0;
  auto inner = [&](double s, double* t_out) {
    const Point3 x = g1.at(s);
    return golden_min([&](double t) { return ref_distance(x, g2.at(t)); }, -range, range, t_out);
  };
  const double d = golden_min([&](double s) { return inner(s, nullptr); }, -range, range, &best_s);
  double best_t = 0.0;
  inner(best_s, &best_t);
  return {d, g1.at(best_s), g2.at(best_t)};
}

}  // namespace hyptube::testing
