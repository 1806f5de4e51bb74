#include "pedoe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pedoe/error.hpp"

namespace pedoe {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "matrix entry count does not match shape");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix difference shapes");
  }
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Vector operator*(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
  Vector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

// --- SymMatrix -------------------------------------------------------------

SymMatrix::SymMatrix(std::size_t dim) : m_(dim, dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidInput, "symmetric matrix needs dim >= 1");
}

SymMatrix::SymMatrix(std::size_t dim, std::vector<double> entries)
    : SymMatrix(Matrix(dim, dim, std::move(entries))) {}

SymMatrix::SymMatrix(const Matrix& m) : m_(m.rows(), m.cols()) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "symmetric matrix must be square");
  if (m.rows() == 0) throw Error(ErrorKind::InvalidInput, "symmetric matrix needs dim >= 1");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    m_(i, i) = m(i, i);
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const double avg = 0.5 * (m(i, j) + m(j, i));
      m_(i, j) = avg;
      m_(j, i) = avg;
    }
  }
}

SymMatrix SymMatrix::identity(std::size_t dim) { return SymMatrix(Matrix::identity(dim)); }

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
  SymMatrix d(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) d.m_(i, i) = values[i];
  return d;
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  m_(i, j) = value;
  m_(j, i) = value;
}

bool operator==(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) return false;
  const auto ea = a.m_.entries();
  const auto eb = b.m_.entries();
  return std::equal(ea.begin(), ea.end(), eb.begin());
}

SymMatrix operator*(double s, const SymMatrix& m) {
  SymMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j) r.set(i, j, s * m(i, j));
  return r;
}

// --- eigen / inverse / inertia ---------------------------------------------

Eigensystem jacobi_eigen(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Matrix a = m.matrix();
  Matrix v = Matrix::identity(n);

  double full = 0.0;
  for (double x : a.entries()) full += x * x;
  full = std::sqrt(full);
  const double target = 1e-12 * full;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += a(i, j) * a(i, j);
    // Stop at 1e-12 relative, or earlier if round-off has flattened progress.
    if (std::sqrt(off) <= target || off == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  Eigensystem es{Vector(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
  }
  return es;
}

namespace {

std::pair<double, double> magnitude_range(const Vector& values) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double x : values) {
    lo = std::min(lo, std::abs(x));
    hi = std::max(hi, std::abs(x));
  }
  return {lo, hi};
}

}  // namespace

double condition_number(const SymMatrix& m) {
  const auto [lo, hi] = magnitude_range(jacobi_eigen(m).values);
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

SymMatrix invert_symmetric(const SymMatrix& m, double cond_limit) {
  if (!(cond_limit > 1.0)) throw Error(ErrorKind::InvalidInput, "cond_limit must exceed 1");
  const Eigensystem es = jacobi_eigen(m);
  const auto [lo, hi] = magnitude_range(es.values);
  if (hi == 0.0 || lo == 0.0 || hi / lo > cond_limit || !std::isfinite(hi / lo)) {
    throw Error(ErrorKind::Singular, "matrix is singular or too ill-conditioned to invert");
  }
  const std::size_t n = m.dim();
  Matrix inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = 1.0 / es.values[k];
    for (std::size_t i = 0; i < n; ++i) {
      const double vik = es.vectors(i, k) * w;
      for (std::size_t j = 0; j < n; ++j) inv(i, j) += vik * es.vectors(j, k);
    }
  }
  return SymMatrix(inv);
}

Inertia inertia(const SymMatrix& m, double zero_tol) {
  if (!(zero_tol >= 0.0)) throw Error(ErrorKind::InvalidInput, "zero_tol must be nonnegative");
  Inertia in;
  for (double lambda : jacobi_eigen(m).values) {
    if (lambda > zero_tol) {
      ++in.positive;
    } else if (lambda < -zero_tol) {
      ++in.negative;
    } else {
      ++in.zero;
    }
  }
  return in;
}

Inertia inertia(const SymMatrix& m) { return inertia(m, kDefaultZeroTolScale * m.max_abs()); }

// --- affine solve ------------------------------------------------------------

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(std::span<const double> a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

double matrix_inf_norm(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
    m = std::max(m, s);
  }
  return m;
}

// One-sided (Hestenes) Jacobi on the columns of w. On return the columns are
// mutually orthogonal and v holds the accumulated rotations: w_in * v = w_out.
void hestenes(std::vector<Vector>& w, std::vector<Vector>& v) {
  const std::size_t m = w.size();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const double alpha = dot(w[i], w[i]);
        const double beta = dot(w[j], w[j]);
        const double gamma = dot(w[i], w[j]);
        if (std::abs(gamma) <= eps * std::sqrt(alpha * beta) || gamma == 0.0) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t =
            std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < w[i].size(); ++k) {
          const double wi = w[i][k];
          const double wj = w[j][k];
          w[i][k] = c * wi - s * wj;
          w[j][k] = s * wi + c * wj;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double vi = v[i][k];
          const double vj = v[j][k];
          v[i][k] = c * vi - s * vj;
          v[j][k] = s * vi + c * vj;
        }
      }
    }
    if (!rotated) break;
  }
}

}  // namespace

AffineSolution solve_affine(const Matrix& equations, std::span<const double> rhs, double rank_tol) {
  const std::size_t m = equations.rows();
  const std::size_t k = equations.cols();
  if (rhs.size() != m) throw Error(ErrorKind::DimensionMismatch, "rhs length differs from equation count");

  // Columns of A^T are the equation rows; orthogonalizing them gives
  // A^T V = U S, i.e. A = V S U^T.
  std::vector<Vector> w(m);
  std::vector<Vector> v(m, Vector(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    w[i] = equations.row(i);
    v[i][i] = 1.0;
  }
  hestenes(w, v);

  std::vector<double> sigma(m);
  double sigma_max = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sigma[i] = std::sqrt(dot(w[i], w[i]));
    sigma_max = std::max(sigma_max, sigma[i]);
  }

  std::vector<Vector> range;  // orthonormal basis of the row space
  Vector x(k, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (sigma_max == 0.0 || sigma[i] <= rank_tol * sigma_max) continue;
    Vector u = w[i];
    for (double& c : u) c /= sigma[i];
    // v[i] is column i of V stored as a vector.
    const double coeff = dot(v[i], rhs) / sigma[i];
    for (std::size_t c = 0; c < k; ++c) x[c] += coeff * u[c];
    range.push_back(std::move(u));
  }

  const Vector ax = equations * std::span<const double>(x);
  double resid = 0.0;
  for (std::size_t i = 0; i < m; ++i) resid = std::max(resid, std::abs(ax[i] - rhs[i]));
  const double scale = matrix_inf_norm(equations) * inf_norm(x) + inf_norm(rhs);
  if (resid > 1e-10 * scale) {
    throw Error(ErrorKind::Inconsistent, "linear system has no exact solution");
  }

  // Orthonormal complement of the row space, built greedily from the
  // coordinate axes with two rounds of Gram-Schmidt.
  std::vector<Vector> basis = range;
  std::vector<Vector> kernel;
  const std::size_t want = k - std::min(k, range.size());
  while (kernel.size() < want) {
    Vector best;
    double best_norm = -1.0;
    for (std::size_t axis = 0; axis < k; ++axis) {
      Vector e(k, 0.0);
      e[axis] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (const Vector& b : basis) {
          const double p = dot(b, e);
          for (std::size_t c = 0; c < k; ++c) e[c] -= p * b[c];
        }
      const double nrm = std::sqrt(dot(e, e));
      if (nrm > best_norm) {
        best_norm = nrm;
        best = std::move(e);
      }
    }
    for (double& c : best) c /= best_norm;
    basis.push_back(best);
    kernel.push_back(std::move(best));
  }

  return {std::move(x), std::move(kernel)};
}

}  // namespace pedoe
