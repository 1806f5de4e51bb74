#pragma once

// Shared helpers for the test binaries: a seeded generator, random shapes,
// and plain Euclidean oracles that never touch the Minkowski machinery.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pedoe/error.hpp"
#include "pedoe/geometry.hpp"
#include "pedoe/linalg.hpp"
#include "pedoe/minkowski.hpp"

namespace testing {

inline const double kRoot3 = std::sqrt(3.0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  std::vector<double> point(std::size_t n, double lo, double hi) {
    std::vector<double> p(n);
    for (double& x : p) x = uniform(lo, hi);
    return p;
  }

  /// Positive radius in [rlo, rhi], center in the box [-span, span]^n.
  pedoe::Sphere sphere(std::size_t n, double span = 5.0, double rlo = 0.2, double rhi = 3.0) {
    return pedoe::Sphere(point(n, -span, span), uniform(rlo, rhi));
  }

  pedoe::MVector mvector(std::size_t n, double scale = 3.0) { return pedoe::MVector(point(n + 2, -scale, scale)); }

  pedoe::SymMatrix symmetric(std::size_t dim, double scale = 1.0) {
    std::vector<double> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j) e[i * dim + j] = e[j * dim + i] = uniform(-scale, scale);
    return pedoe::SymMatrix(dim, std::move(e));
  }

  pedoe::Matrix matrix(std::size_t rows, std::size_t cols, double scale = 1.0) {
    std::vector<double> e(rows * cols);
    for (double& x : e) x = uniform(-scale, scale);
    return pedoe::Matrix(rows, cols, std::move(e));
  }

 private:
  std::mt19937_64 gen_;
};

inline double dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline double max_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  return max_diff(std::span<const double>(a), std::span<const double>(b));
}

inline double max_diff(const pedoe::MVector& a, const pedoe::MVector& b) {
  return max_diff(a.components(), b.components());
}

inline double max_diff(const pedoe::Matrix& a, const pedoe::Matrix& b) { return max_diff(a.entries(), b.entries()); }

inline double max_diff(const pedoe::SymMatrix& a, const pedoe::SymMatrix& b) {
  return max_diff(a.matrix(), b.matrix());
}

inline pedoe::SymMatrix sym(std::size_t dim, std::vector<double> entries) {
  return pedoe::SymMatrix(dim, std::move(entries));
}

/// Ones everywhere.
inline pedoe::SymMatrix ones(std::size_t dim) { return pedoe::SymMatrix(dim, std::vector<double>(dim * dim, 1.0)); }

/// N - 2I: the Gram matrix of n+2 mutually externally tangent spheres.
inline pedoe::SymMatrix descartes_gram(std::size_t dim) {
  pedoe::SymMatrix f = ones(dim);
  for (std::size_t i = 0; i < dim; ++i) f.set(i, i, -1.0);
  return f;
}

/// Three externally tangent unit circles.
inline std::vector<pedoe::GeneralizedSphere> unit_triple() {
  return {pedoe::Sphere({0.0, 0.0}, 1.0), pedoe::Sphere({2.0, 0.0}, 1.0), pedoe::Sphere({1.0, kRoot3}, 1.0)};
}

/// Point at distance da from a and db from b (planar), on the left of a->b.
inline std::vector<double> place(const std::vector<double>& a, double da, const std::vector<double>& b, double db) {
  const double d = dist(a, b);
  const double along = (da * da - db * db + d * d) / (2 * d);
  const double h = std::sqrt(std::max(0.0, da * da - along * along));
  const double ux = (b[0] - a[0]) / d;
  const double uy = (b[1] - a[1]) / d;
  return {a[0] + along * ux - h * uy, a[1] + along * uy + h * ux};
}

/// Externally tangent triple with curvatures k1, k2, k3 (all positive).
inline std::vector<pedoe::GeneralizedSphere> tangent_triple(double k1, double k2, double k3) {
  const double r1 = 1 / k1, r2 = 1 / k2, r3 = 1 / k3;
  const std::vector<double> c1{0.0, 0.0}, c2{r1 + r2, 0.0};
  return {pedoe::Sphere(c1, r1), pedoe::Sphere(c2, r2), pedoe::Sphere(place(c1, r1 + r3, c2, r2 + r3), r3)};
}

/// Euclidean tangency: d == r + r_i (external) or d == |r - r_i| (internal),
/// on geometric radii. Returns the smaller of the two defects.
inline double tangency_defect(const pedoe::Sphere& a, const pedoe::Sphere& b) {
  const double d = dist(a.center(), b.center());
  const double ra = std::abs(a.radius()), rb = std::abs(b.radius());
  return std::min(std::abs(d - (ra + rb)), std::abs(d - std::abs(ra - rb)));
}

/// Distance from a line normal . x = offset to a circle's center, minus |r|.
inline double tangency_defect(const pedoe::Hyperplane& h, const pedoe::Sphere& c) {
  double s = -h.offset();
  for (std::size_t k = 0; k < h.dim(); ++k) s += h.normal()[k] * c.center()[k];
  return std::abs(std::abs(s) - std::abs(c.radius()));
}

/// Oriented tangency against a positively oriented known circle k:
/// sign +1 asks for d == |r + r_k|, sign -1 for d == |r - r_k| (r signed);
/// for a line n.x = c, +1 asks for n.p - c == -r_k and -1 for +r_k.
inline double oriented_tangency_defect(const pedoe::GeneralizedSphere& x, const pedoe::Sphere& k, int sign) {
  if (const auto* s = std::get_if<pedoe::Sphere>(&x)) {
    return std::abs(dist(s->center(), k.center()) - std::abs(s->radius() + sign * k.radius()));
  }
  const auto& h = std::get<pedoe::Hyperplane>(x);
  double s = -h.offset();
  for (std::size_t i = 0; i < h.dim(); ++i) s += h.normal()[i] * k.center()[i];
  return std::abs(s + sign * k.radius());
}

/// Three pairwise disjoint circles with integer centers and radii.
inline std::array<pedoe::Sphere, 3> disjoint_integer_triple(Rng& rng) {
  for (;;) {
    std::vector<pedoe::Sphere> c;
    for (int i = 0; i < 3; ++i) {
      c.emplace_back(std::vector<double>{double(rng.integer(-10, 10)), double(rng.integer(-10, 10))},
                     double(rng.integer(1, 4)));
    }
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) ok = ok && dist(c[i].center(), c[j].center()) > c[i].radius() + c[j].radius();
    if (ok) return {c[0], c[1], c[2]};
  }
}

template <class F>
pedoe::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const pedoe::Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected a pedoe::Error");
}

}  // namespace testing
