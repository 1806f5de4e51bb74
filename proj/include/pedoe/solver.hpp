#pragma once

// Solving for an unknown sphere X from its required Pedoe products with n+1
// known spheres.
//
// The n+1 conditions <C_i, X> = t_i are linear in the Minkowski vector of X,
// so they cut out a line x_p + s k. The normalization <X, X> = -1 is then a
// quadratic in s, giving zero, one or two oriented spheres. Apollonius,
// Descartes/Soddy and the orthogonal circle are all special target rows.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pedoe/geometry.hpp"
#include "pedoe/linalg.hpp"
#include "pedoe/minkowski.hpp"

namespace pedoe {

/// Target Pedoe products between each known sphere and the unknown one.
class ConstraintRow {
 public:
  explicit ConstraintRow(std::vector<double> targets);
  static ConstraintRow uniform(std::size_t count, double value);

  std::size_t size() const noexcept { return targets_.size(); }
  const std::vector<double>& targets() const noexcept { return targets_; }
  double operator[](std::size_t i) const { return targets_[i]; }

 private:
  std::vector<double> targets_;
};

namespace relation {
inline constexpr double kExternal = 1.0;
inline constexpr double kInternal = -1.0;
inline constexpr double kOrthogonal = 0.0;
/// cos(angle) for spheres meeting at `radians`.
double angle(double radians);
/// (d^2 - r1^2 - r2^2) / (2 r1 r2) with signed radii.
double from_distance(double distance, double r1, double r2);
}  // namespace relation

struct Solution {
  GeneralizedSphere sphere;
  MVector vector;   // Pedoe vector of `sphere`
  double residual;  // max_i |<C_i, X> - t_i|
};

struct SolveResult {
  /// Ordered by curvature, descending.
  std::vector<Solution> solutions;
  /// Roots that reproduced one of the known spheres (either orientation).
  std::vector<GeneralizedSphere> coincident;
  double discriminant = 0.0;
};

struct SolveOptions {
  double ray_tol = kDefaultRayTol;
};

/// Throws Error(DependentKnowns) if the knowns' Pedoe vectors are linearly
/// dependent and NoRealSolutionError if the quadratic has no real root.
SolveResult complete_configuration(std::span<const GeneralizedSphere> known, const ConstraintRow& row,
                                   const SolveOptions& options = {});

/// Each sign is +1 (external tangency) or -1 (internal tangency).
using Signs = std::array<int, 3>;

/// The 4x4 configuration matrix the Apollonius solution must have: the
/// pairwise products of the given circles, computed from center distances,
/// bordered by the signs.
SymMatrix apollonius_matrix(const Sphere& c1, const Sphere& c2, const Sphere& c3, const Signs& signs);

SolveResult apollonius(const Sphere& c1, const Sphere& c2, const Sphere& c3, const Signs& signs,
                       const SolveOptions& options = {});

struct ApolloniusCase {
  Signs signs;
  SolveResult result;
  bool solvable = true;  // false if this pattern had a negative discriminant
};

/// All eight sign patterns, +++ first and --- last. A circle already found by
/// an earlier pattern (in either orientation) is not repeated.
std::vector<ApolloniusCase> apollonius_all(const Sphere& c1, const Sphere& c2, const Sphere& c3,
                                           const SolveOptions& options = {});

/// Both spheres tangent to n+1 mutually (oriented-externally) tangent
/// spheres. Throws Error(NotTangent) if some pair has product != +1.
SolveResult soddy_circles(std::span<const GeneralizedSphere> tangent, const SolveOptions& options = {});

/// The sphere orthogonal to n+1 mutually tangent spheres, in both
/// orientations.
SolveResult orthogonal_circle(std::span<const GeneralizedSphere> tangent, const SolveOptions& options = {});

/// Roots d of b^T F b = 0 where b = (known_b..., d), descending.
std::vector<double> curvature_solve(const SymMatrix& F, std::span<const double> known_b);

enum class Family {
  Descartes,         // n+2 = 4 mutually tangent circles
  SoddyGossett,      // n+2 mutually tangent spheres in R^n
  OrthogonalTriple,  // three mutually orthogonal circles + one tangent to each
  OrthogonalPair,    // orthogonal pair a, b + tangent pair c, d, each touching a and b
};

/// Accepts "descartes", "soddy-gossett", "orthogonal-triple",
/// "orthogonal-pair" (case-insensitive, '_' or '-'). Throws
/// Error(UnknownFamily).
Family parse_family(std::string_view name);

/// |lhs - rhs| of the curvature identity of the family, evaluated on signed
/// curvatures exactly as given:
///   Descartes, SoddyGossett:  (sum b)^2 = n sum b^2
///   OrthogonalTriple:         2(a^2 + b^2 + c^2) = (a + b + c + d)^2
///   OrthogonalPair:           2[(2a)^2 + (2b)^2 + (c - d)^2] = (2a + 2b + c + d)^2
double family_identity_residual(Family family, std::span<const double> curvatures);

}  // namespace pedoe
