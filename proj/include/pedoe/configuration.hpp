#pragma once

// Configuration (Gram) matrices of n+2 spheres in R^n.
//
// With A the data matrix whose columns are the Pedoe vectors, f = A^T g A and
// F = f^{-1}; whenever f is invertible the master identity A F A^T = G holds,
// G being the inverse metric. Reading that identity row by row gives
// v_i^T F v_j = G_ij for the curvature, co-curvature and reduced-position
// rows v_i of A.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pedoe/geometry.hpp"
#include "pedoe/linalg.hpp"
#include "pedoe/minkowski.hpp"

namespace pedoe {

/// n+2 Pedoe vectors stored as columns.
class DataMatrix {
 public:
  /// Requires exactly n+2 columns of equal length n+2.
  explicit DataMatrix(std::vector<MVector> columns);
  static DataMatrix from_spheres(std::span<const GeneralizedSphere> spheres);

  std::size_t ambient_dim() const noexcept { return columns_.front().ambient_dim(); }
  const std::vector<MVector>& columns() const noexcept { return columns_; }
  Matrix matrix() const;
  /// Row i of A: curvatures (0), co-curvatures (1), reduced positions (2..).
  Vector row(std::size_t i) const;

 private:
  std::vector<MVector> columns_;
};

class ConfigurationMatrix {
 public:
  explicit ConfigurationMatrix(SymMatrix f, double cond_limit = kDefaultCondLimit);

  const SymMatrix& f() const noexcept { return f_; }
  bool invertible() const noexcept { return F_.has_value(); }
  /// Throws Error(Singular) if f could not be inverted.
  const SymMatrix& inverse() const;
  const Inertia& inertia() const noexcept { return inertia_; }

 private:
  SymMatrix f_;
  std::optional<SymMatrix> F_;
  Inertia inertia_;
};

/// Pairwise Minkowski products; any number of vectors.
SymMatrix gram_matrix(std::span<const MVector> vectors);

/// Configuration of n+2 spheres/hyperplanes. A singular Gram matrix is not an
/// error here: the result simply has no inverse.
ConfigurationMatrix gram(std::span<const GeneralizedSphere> spheres);

/// max |A F A^T - G|. Throws Error(Singular).
double master_residual(std::span<const GeneralizedSphere> spheres);

/// Matrix of v_i^T F v_j over the rows of A. Throws Error(Singular).
SymMatrix dual_products(std::span<const GeneralizedSphere> spheres);

enum class Realizability { Realizable, NotRealizable, Degenerate };

const char* to_string(Realizability r);

/// A hypothetical configuration matrix of size n+2 can come from actual
/// spheres only if its inertia is (1, n+1, 0).
Realizability realizable(const SymMatrix& f, double zero_tol);
/// zero_tol = 1e-9 * max|f_ij|.
Realizability realizable(const SymMatrix& f);

}  // namespace pedoe
