#include "pedoe/minkowski.hpp"

#include <algorithm>
#include <cmath>

#include "pedoe/error.hpp"

namespace pedoe {

MVector::MVector(std::vector<double> components) : c_(std::move(components)) {
  if (c_.size() < 3) {
    throw Error(ErrorKind::InvalidInput, "Minkowski vector needs at least 3 components");
  }
  for (double x : c_) {
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidInput, "Minkowski vector has a non-finite component");
  }
}

MVector::MVector(std::initializer_list<double> components)
    : MVector(std::vector<double>(components)) {}

MVector MVector::zero(std::size_t ambient_dim) {
  return MVector(std::vector<double>(ambient_dim + 2, 0.0));
}

double MVector::max_abs() const noexcept {
  double m = 0.0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

MVector MVector::operator-() const {
  std::vector<double> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return MVector(std::move(r));
}

MVector operator+(const MVector& a, const MVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sum");
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.c_[i] + b.c_[i];
  return MVector(std::move(r));
}

MVector operator-(const MVector& a, const MVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector difference");
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.c_[i] - b.c_[i];
  return MVector(std::move(r));
}

MVector operator*(double s, const MVector& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v.c_[i];
  return MVector(std::move(r));
}

const char* to_string(RayClass c) {
  switch (c) {
    case RayClass::ProperSphere: return "ProperSphere";
    case RayClass::PointRay: return "PointRay";
    case RayClass::HyperplaneRay: return "HyperplaneRay";
    case RayClass::Imaginary: return "Imaginary";
  }
  return "Unknown";
}

SymMatrix metric(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "ambient dimension must be >= 1");
  SymMatrix g(n + 2);
  g.set(0, 1, 0.5);
  for (std::size_t k = 2; k < n + 2; ++k) g.set(k, k, -1.0);
  return g;
}

SymMatrix metric_inverse(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "ambient dimension must be >= 1");
  SymMatrix g(n + 2);
  g.set(0, 1, 2.0);
  for (std::size_t k = 2; k < n + 2; ++k) g.set(k, k, -1.0);
  return g;
}

double inner(const MVector& v, const MVector& w) {
  if (v.size() != w.size()) throw Error(ErrorKind::DimensionMismatch, "inner product of vectors of different length");
  // Unit vectors of small spheres far from the origin have b * b-bar and |p/r|^2
  // near 1e4 cancelling down to -1; a wider accumulator keeps those digits.
  long double s = 0.5L * (static_cast<long double>(v[0]) * w[1] + static_cast<long double>(v[1]) * w[0]);
  for (std::size_t k = 2; k < v.size(); ++k) s -= static_cast<long double>(v[k]) * w[k];
  return static_cast<double>(s);
}

double norm_sq(const MVector& v) { return inner(v, v); }

RayClass classify_ray(const MVector& v, double tol) {
  const double scale = v.max_abs();
  if (scale == 0.0) throw Error(ErrorKind::ZeroVector, "cannot classify the zero vector");
  if (std::abs(v.curvature()) <= tol * scale) return RayClass::HyperplaneRay;
  const double q = norm_sq(v);
  if (std::abs(q) <= tol * scale * scale) return RayClass::PointRay;
  return q < 0.0 ? RayClass::ProperSphere : RayClass::Imaginary;
}

MVector to_orthonormal(const MVector& v) {
  std::vector<double> r(v.components().begin(), v.components().end());
  r[0] = 0.5 * (v[0] + v[1]);
  r[1] = 0.5 * (v[0] - v[1]);
  return MVector(std::move(r));
}

MVector from_orthonormal(const MVector& v) {
  std::vector<double> r(v.components().begin(), v.components().end());
  r[0] = v[0] + v[1];
  r[1] = v[0] - v[1];
  return MVector(std::move(r));
}

double inner_orthonormal(const MVector& v, const MVector& w) {
  if (v.size() != w.size()) throw Error(ErrorKind::DimensionMismatch, "inner product of vectors of different length");
  double s = v[0] * w[0];
  for (std::size_t k = 1; k < v.size(); ++k) s -= v[k] * w[k];
  return s;
}

}  // namespace pedoe
