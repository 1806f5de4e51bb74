#pragma once

// The isotropic Minkowski space R^{1,n+1} that spheres of R^n live in.
//
// Components are always ordered (b, b_bar, x_1 .. x_n): curvature,
// co-curvature and reduced position. The metric is
//
//   <v, w> = (v_0 w_1 + v_1 w_0) / 2 - sum_{k>=2} v_k w_k
//
// which has signature (+, -, ..., -). Proper spheres are unit space-like
// vectors (norm -1), points sit on the light cone, hyperplanes have b = 0.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "pedoe/linalg.hpp"

namespace pedoe {

class MVector {
 public:
  /// Requires at least three components, all finite.
  explicit MVector(std::vector<double> components);
  MVector(std::initializer_list<double> components);

  static MVector zero(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return c_.size() - 2; }
  std::size_t size() const noexcept { return c_.size(); }

  double curvature() const noexcept { return c_[0]; }
  double cocurvature() const noexcept { return c_[1]; }
  /// k-th reduced position coordinate, 0-based.
  double reduced(std::size_t k) const { return c_.at(k + 2); }
  std::span<const double> reduced_position() const noexcept {
    return std::span<const double>(c_).subspan(2);
  }

  double operator[](std::size_t i) const { return c_[i]; }
  std::span<const double> components() const noexcept { return c_; }
  double max_abs() const noexcept;

  MVector operator-() const;
  friend MVector operator+(const MVector& a, const MVector& b);
  friend MVector operator-(const MVector& a, const MVector& b);
  friend MVector operator*(double s, const MVector& v);
  friend bool operator==(const MVector&, const MVector&) = default;

 private:
  std::vector<double> c_;
};

enum class RayClass { ProperSphere, PointRay, HyperplaneRay, Imaginary };

const char* to_string(RayClass c);

inline constexpr double kDefaultRayTol = 1e-9;

/// (n+2)x(n+2) isotropic metric: [[0, 1/2], [1/2, 0]] (+) -I_n.
SymMatrix metric(std::size_t n);
/// Its inverse: [[0, 2], [2, 0]] (+) -I_n.
SymMatrix metric_inverse(std::size_t n);

/// Throws Error(DimensionMismatch) for vectors of different length.
double inner(const MVector& v, const MVector& w);
double norm_sq(const MVector& v);

/// With s = max|v_i|:
///   |b| <= tol * s          -> HyperplaneRay
///   |<v,v>| <= tol * s^2    -> PointRay
///   <v,v> < 0               -> ProperSphere
///   otherwise               -> Imaginary
/// Invariant under scaling of v. Throws Error(ZeroVector) for v = 0.
RayClass classify_ray(const MVector& v, double tol = kDefaultRayTol);

/// Isotropic -> orthonormal coordinates: ((b + b_bar)/2, (b - b_bar)/2, x...).
/// In the orthonormal frame the metric is diag(1, -1, ..., -1).
MVector to_orthonormal(const MVector& v);
MVector from_orthonormal(const MVector& v);
/// v_0 w_0 - sum_{k>=1} v_k w_k.
double inner_orthonormal(const MVector& v, const MVector& w);

}  // namespace pedoe
