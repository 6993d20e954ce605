#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hyptube/arrangement.hpp"
#include "hyptube/error.hpp"

namespace hyptube {

namespace {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Uniform random rotation from a uniform unit quaternion (Shoemake).
Mat3 random_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u1 = unit(rng), u2 = unit(rng), u3 = unit(rng);
  const double twopi = 2.0 * std::numbers::pi;
  const double a = std::sqrt(1.0 - u1) * std::sin(twopi * u2);
  const double b = std::sqrt(1.0 - u1) * std::cos(twopi * u2);
  const double c = std::sqrt(u1) * std::sin(twopi * u3);
  const double w = std::sqrt(u1) * std::cos(twopi * u3);
  return Mat3{Vec3{1 - 2 * (b * b + c * c), 2 * (a * b - c * w), 2 * (a * c + b * w)},
              Vec3{2 * (a * b + c * w), 1 - 2 * (a * a + c * c), 2 * (b * c - a * w)},
              Vec3{2 * (a * c - b * w), 2 * (b * c + a * w), 1 - 2 * (a * a + b * b)}};
}

Vec3 rotate(const Mat3& m, const Vec3& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

Vec3 apply_transpose(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v[0] + m[1][0] * v[1] + m[2][0] * v[2],
          m[0][1] * v[0] + m[1][1] * v[1] + m[2][1] * v[2],
          m[0][2] * v[0] + m[1][2] * v[1] + m[2][2] * v[2]};
}

// A band of angular half-width `band` about the circle {y : n·y = h} is the
// set cos(α + band) ≤ n·y ≤ cos(α − band), α = arccos h.
struct Band {
  Vec3 normal;
  double lo, hi;
};

Band make_band(const CircleOnSphere& c, double band) {
  const double a = c.coeff_a(), d = c.coeff_d();
  const Complex b = c.coeff_b();
  Vec3 n = {2.0 * b.real(), 2.0 * b.imag(), a - d};
  const double len = std::sqrt(dot(n, n));
  for (double& x : n) x /= len;
  const double alpha = std::acos(std::clamp(-(a + d) / len, -1.0, 1.0));
  const double hi = alpha - band <= 0.0 ? 1.0 : std::cos(alpha - band);
  const double lo = alpha + band >= std::numbers::pi ? -1.0 : std::cos(alpha + band);
  return {n, lo, hi};
}

}  // namespace

bool flood_fill_oracle(std::span<const CircleOnSphere> circles, const IdealPoint& p,
                       const IdealPoint& q, int resolution, std::uint64_t seed) {
  if (resolution < 64) throw Error(ErrorKind::InvalidArgument, "oracle resolution must be >= 64");
  const int rows = resolution;
  const int cols = 2 * resolution;
  const double pi = std::numbers::pi;
  // Adjacent cell centres are at most π/rows apart, so a band wider than half
  // of that cannot be straddled by a pair of neighbours.
  const double band = 0.75 * pi / rows;
  const Mat3 rot = random_rotation(seed);

  std::vector<Band> bands;
  for (const CircleOnSphere& c : circles) bands.push_back(make_band(c, band));

  std::vector<std::uint8_t> open(static_cast<std::size_t>(rows) * cols, 1);
  for (int i = 0; i < rows; ++i) {
    const double theta = pi * (i + 0.5) / rows;
    const double st = std::sin(theta), ct = std::cos(theta);
    for (int j = 0; j < cols; ++j) {
      const double phi = 2.0 * pi * (j + 0.5) / cols;
      const Vec3 x = rotate(rot, Vec3{st * std::cos(phi), st * std::sin(phi), ct});
      for (const Band& b : bands) {
        const double s = dot(b.normal, x);
        if (s >= b.lo && s <= b.hi) {
          open[static_cast<std::size_t>(i) * cols + j] = 0;
          break;
        }
      }
    }
  }

  auto cell_of = [&](const IdealPoint& point) {
    const Vec3 u = apply_transpose(rot, point.to_sphere());
    const double theta = std::acos(std::clamp(u[2], -1.0, 1.0));
    double phi = std::atan2(u[1], u[0]);
    if (phi < 0.0) phi += 2.0 * pi;
    const int i = std::clamp(static_cast<int>(theta / pi * rows), 0, rows - 1);
    const int j = std::clamp(static_cast<int>(phi / (2.0 * pi) * cols), 0, cols - 1);
    const std::size_t cell = static_cast<std::size_t>(i) * cols + j;
    if (!open[cell]) {
      throw Error(ErrorKind::GuardBandSwallowedPoint, "query point lies in the guard band");
    }
    return cell;
  };
  const std::size_t start = cell_of(p);
  const std::size_t goal = cell_of(q);

  std::vector<std::size_t> queue{start};
  open[start] = 0;
  auto visit = [&](int i, int j) {
    j = (j % cols + cols) % cols;
    const std::size_t cell = static_cast<std::size_t>(i) * cols + j;
    if (open[cell]) {
      open[cell] = 0;
      queue.push_back(cell);
    }
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t cell = queue[head];
    if (cell == goal) return false;
    const int i = static_cast<int>(cell / cols);
    const int j = static_cast<int>(cell % cols);
    visit(i, j - 1);
    visit(i, j + 1);
    if (i > 0) visit(i - 1, j);
    if (i + 1 < rows) visit(i + 1, j);
    // Polar rows connect across the pole.
    if (i == 0 || i == rows - 1) visit(i, j + cols / 2);
  }
  return true;
}

}  // namespace hyptube
