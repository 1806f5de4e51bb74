#pragma once

// Small dense linear algebra for (n+2)x(n+2) configuration matrices.
//
// Everything here is sized for dimensions below ~10: Jacobi rotations are used
// both for the symmetric eigenproblem and for the SVD behind solve_affine.

#include <cstddef>
#include <span>
#include <vector>

namespace pedoe {

using Vector = std::vector<double>;

/// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> entries() const noexcept { return data_; }
  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  Matrix transposed() const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> x);

/// Symmetric matrix. Construction averages (m + m^T)/2, so the stored entries
/// are exactly symmetric whatever round-off the input carried.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim);
  SymMatrix(std::size_t dim, std::vector<double> entries);
  explicit SymMatrix(const Matrix& m);

  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value);

  const Matrix& matrix() const noexcept { return m_; }
  double max_abs() const { return m_.max_abs(); }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b);

 private:
  Matrix m_;
};

SymMatrix operator*(double s, const SymMatrix& m);

/// Sylvester inertia: eigenvalue sign counts.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct Eigensystem {
  Vector values;
  Matrix vectors;  // column k is the eigenvector for values[k]
};

inline constexpr double kDefaultCondLimit = 1e12;
inline constexpr double kDefaultZeroTolScale = 1e-9;

/// Cyclic Jacobi, iterated until the off-diagonal Frobenius norm is at most
/// 1e-12 of the full norm. Eigenvalues are sorted descending.
Eigensystem jacobi_eigen(const SymMatrix& m);

/// Ratio of largest to smallest eigenvalue magnitude (infinity if singular).
double condition_number(const SymMatrix& m);

/// Throws Error(Singular) when the condition number exceeds cond_limit.
SymMatrix invert_symmetric(const SymMatrix& m, double cond_limit = kDefaultCondLimit);

Inertia inertia(const SymMatrix& m, double zero_tol);
/// zero_tol = 1e-9 * max|m_ij|.
Inertia inertia(const SymMatrix& m);

struct AffineSolution {
  Vector particular;
  std::vector<Vector> kernel;  // Euclidean-orthonormal
};

/// Minimum-norm solution of equations * x = rhs plus an orthonormal kernel
/// basis. Singular values below rank_tol * sigma_max count as zero, which
/// enlarges the kernel. Throws Error(Inconsistent) if the least-squares
/// residual is not at round-off level.
AffineSolution solve_affine(const Matrix& equations, std::span<const double> rhs,
                            double rank_tol = 1.0 / kDefaultCondLimit);

}  // namespace pedoe
