#include "pedoe/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "pedoe/error.hpp"

namespace pedoe {

namespace {

void require_finite(const std::vector<double>& xs, const char* what) {
  for (double x : xs) {
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidInput, std::string(what) + " has a non-finite coordinate");
  }
}

double squared_norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "points of different dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

Sphere::Sphere(std::vector<double> center, double radius) : center_(std::move(center)), radius_(radius) {
  if (center_.empty()) throw Error(ErrorKind::InvalidInput, "sphere center is empty");
  require_finite(center_, "sphere center");
  if (!std::isfinite(radius_) || radius_ == 0.0) {
    throw Error(ErrorKind::InvalidInput, "sphere radius must be finite and nonzero");
  }
}

Hyperplane::Hyperplane(std::vector<double> normal, double offset) : normal_(std::move(normal)), offset_(offset) {
  if (normal_.empty()) throw Error(ErrorKind::InvalidInput, "hyperplane normal is empty");
  require_finite(normal_, "hyperplane normal");
  if (!std::isfinite(offset_)) throw Error(ErrorKind::InvalidInput, "hyperplane offset must be finite");
  const double len = std::sqrt(squared_norm(normal_));
  if (len == 0.0) throw Error(ErrorKind::InvalidInput, "hyperplane normal is zero");
  if (len != 1.0) {
    for (double& x : normal_) x /= len;
    offset_ /= len;
  }
}

Hyperplane Hyperplane::flipped() const {
  // Negate in place: going through the constructor could renormalize a
  // normal whose length is 1 only up to round-off.
  Hyperplane h = *this;
  for (double& x : h.normal_) x = -x;
  h.offset_ = -offset_;
  return h;
}

PointShape::PointShape(std::vector<double> location) : location_(std::move(location)) {
  if (location_.empty()) throw Error(ErrorKind::InvalidInput, "point is empty");
  require_finite(location_, "point");
}

std::size_t dimension(const GeneralizedSphere& s) {
  return std::visit([](const auto& x) { return x.dim(); }, s);
}

double curvature(const GeneralizedSphere& s) {
  if (const auto* sp = std::get_if<Sphere>(&s)) return sp->curvature();
  if (std::holds_alternative<Hyperplane>(s)) return 0.0;
  throw Error(ErrorKind::ImproperCircle, "a point has no curvature");
}

GeneralizedSphere flip(const GeneralizedSphere& s) {
  if (const auto* sp = std::get_if<Sphere>(&s)) return sp->flipped();
  if (const auto* h = std::get_if<Hyperplane>(&s)) return h->flipped();
  return s;
}

double power_of_point(const PointShape& p, const Sphere& c) {
  const double r = c.radius();
  return squared_distance(p.location(), c.center()) - r * r;
}

double darboux(const Sphere& c1, const Sphere& c2) {
  const double r1 = c1.radius();
  const double r2 = c2.radius();
  return squared_distance(c1.center(), c2.center()) - r1 * r1 - r2 * r2;
}

MVector pedoe_vector(const GeneralizedSphere& s) {
  if (const auto* sp = std::get_if<Sphere>(&s)) {
    const double r = sp->radius();
    const auto& p = sp->center();
    std::vector<double> v(p.size() + 2);
    v[0] = 1.0 / r;
    v[1] = (squared_norm(p) - r * r) / r;
    for (std::size_t k = 0; k < p.size(); ++k) v[k + 2] = p[k] / r;
    return MVector(std::move(v));
  }
  if (const auto* h = std::get_if<Hyperplane>(&s)) {
    std::vector<double> v(h->dim() + 2);
    v[0] = 0.0;
    v[1] = 2.0 * h->offset();
    std::copy(h->normal().begin(), h->normal().end(), v.begin() + 2);
    return MVector(std::move(v));
  }
  throw Error(ErrorKind::ImproperCircle, "points have no Pedoe vector; use point_ray");
}

MVector point_ray(const PointShape& p) {
  const auto& x = p.location();
  std::vector<double> v(x.size() + 2);
  v[0] = 1.0;
  v[1] = squared_norm(x);
  std::copy(x.begin(), x.end(), v.begin() + 2);
  return MVector(std::move(v));
}

double pedoe_product(const GeneralizedSphere& c1, const GeneralizedSphere& c2) {
  if (dimension(c1) != dimension(c2)) throw Error(ErrorKind::DimensionMismatch, "spheres of different dimension");
  return inner(pedoe_vector(c1), pedoe_vector(c2));
}

double intersection_angle(const Sphere& c1, const Sphere& c2) {
  const double p = pedoe_product(c1, c2);
  if (std::abs(p) > 1.0 + 1e-12) throw Error(ErrorKind::Disjoint, "spheres do not intersect");
  return std::acos(std::clamp(p, -1.0, 1.0));
}

GeneralizedSphere sphere_from_vector(const MVector& v, double tol) {
  const std::size_t n = v.ambient_dim();
  switch (classify_ray(v, tol)) {
    case RayClass::ProperSphere: {
      const MVector u = (1.0 / std::sqrt(-norm_sq(v))) * v;
      std::vector<double> center(n);
      for (std::size_t k = 0; k < n; ++k) center[k] = u.reduced(k) / u.curvature();
      return Sphere(std::move(center), 1.0 / u.curvature());
    }
    case RayClass::HyperplaneRay: {
      const auto q = v.reduced_position();
      const double len = std::sqrt(squared_norm(q));
      if (len <= tol * v.max_abs()) {
        throw Error(ErrorKind::ImproperCircle, "vector represents the point at infinity");
      }
      return Hyperplane(std::vector<double>(q.begin(), q.end()), 0.5 * v.cocurvature());
    }
    case RayClass::PointRay: {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = v.reduced(k) / v.curvature();
      return PointShape(std::move(x));
    }
    case RayClass::Imaginary:
      break;
  }
  throw Error(ErrorKind::ImaginaryCircle, "time-like vector has no real sphere");
}

GeneralizedSphere invert_in_unit_sphere(const Sphere& s) {
  const double d2 = squared_norm(s.center());
  const double r = s.radius();
  const double k = d2 - r * r;
  if (std::abs(k) <= 1e-12 * std::max({d2, r * r, 1.0})) {
    // The sphere passes through the origin: |x|^2 = 2 c.x maps to c.y = 1/2.
    const double len = std::sqrt(d2);
    const double sign = r > 0.0 ? 1.0 : -1.0;
    std::vector<double> normal(s.center());
    for (double& x : normal) x *= sign / len;
    return Hyperplane(std::move(normal), sign * 0.5 / len);
  }
  std::vector<double> center(s.center());
  for (double& x : center) x /= k;
  return Sphere(std::move(center), r / k);
}

}  // namespace pedoe
