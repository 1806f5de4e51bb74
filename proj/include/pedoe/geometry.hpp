#pragma once

// Spheres, hyperplanes and points of R^n, and the map that sends them to the
// Minkowski space (the special Pedoe map) together with its inverse.
//
// Spheres are oriented: a negative radius denotes the unbounded complementary
// disk, and flipping the orientation negates the Pedoe vector. A hyperplane
// normal . x = offset bounds the half-space normal . x >= offset; its Pedoe
// vector is [0, 2 * offset, normal], the limit of large spheres bounding that
// half-space.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "pedoe/minkowski.hpp"

namespace pedoe {

class Sphere {
 public:
  /// Throws Error(InvalidInput) if radius is zero or anything is non-finite.
  Sphere(std::vector<double> center, double radius);

  std::size_t dim() const noexcept { return center_.size(); }
  const std::vector<double>& center() const noexcept { return center_; }
  /// Signed radius.
  double radius() const noexcept { return radius_; }
  double curvature() const noexcept { return 1.0 / radius_; }

  Sphere flipped() const { return Sphere(center_, -radius_); }

  friend bool operator==(const Sphere&, const Sphere&) = default;

 private:
  std::vector<double> center_;
  double radius_;
};

class Hyperplane {
 public:
  /// normal . x = offset. The normal is rescaled to unit length (and the
  /// offset with it); a zero normal throws Error(InvalidInput).
  Hyperplane(std::vector<double> normal, double offset);

  std::size_t dim() const noexcept { return normal_.size(); }
  const std::vector<double>& normal() const noexcept { return normal_; }
  double offset() const noexcept { return offset_; }

  Hyperplane flipped() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  std::vector<double> normal_;
  double offset_;
};

class PointShape {
 public:
  explicit PointShape(std::vector<double> location);

  std::size_t dim() const noexcept { return location_.size(); }
  const std::vector<double>& location() const noexcept { return location_; }

  friend bool operator==(const PointShape&, const PointShape&) = default;

 private:
  std::vector<double> location_;
};

using GeneralizedSphere = std::variant<Sphere, Hyperplane, PointShape>;

std::size_t dimension(const GeneralizedSphere& s);
/// Signed curvature; 0 for hyperplanes. Points throw Error(ImproperCircle).
double curvature(const GeneralizedSphere& s);
/// Opposite orientation. Points are returned unchanged.
GeneralizedSphere flip(const GeneralizedSphere& s);

/// d^2 - r^2.
double power_of_point(const PointShape& p, const Sphere& c);
/// d^2 - r1^2 - r2^2 (geometric radii).
double darboux(const Sphere& c1, const Sphere& c2);

/// [1/r, (|p|^2 - r^2)/r, p/r] for spheres, [0, 2c, normal] for hyperplanes.
/// Points have no unit vector and throw Error(ImproperCircle).
MVector pedoe_vector(const GeneralizedSphere& s);
/// Light-like [1, |p|^2, p].
MVector point_ray(const PointShape& p);

/// <pedoe_vector(c1), pedoe_vector(c2)>: cosine of the intersection angle,
/// +1 / -1 for external / internal tangency, 0 for orthogonality.
double pedoe_product(const GeneralizedSphere& c1, const GeneralizedSphere& c2);

/// arccos of the Pedoe product, in [0, pi]. Throws Error(Disjoint) when the
/// spheres do not meet.
double intersection_angle(const Sphere& c1, const Sphere& c2);

/// Inverse of the Pedoe map. The orientation of a proper sphere follows the
/// sign of the first component. Imaginary rays throw Error(ImaginaryCircle).
GeneralizedSphere sphere_from_vector(const MVector& v, double tol = kDefaultRayTol);

/// Image under x -> x / |x|^2. Spheres through the origin map to hyperplanes.
GeneralizedSphere invert_in_unit_sphere(const Sphere& s);

}  // namespace pedoe
