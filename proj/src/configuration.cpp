#include "pedoe/configuration.hpp"

#include <algorithm>
#include <cmath>

#include "pedoe/error.hpp"

namespace pedoe {

DataMatrix::DataMatrix(std::vector<MVector> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw Error(ErrorKind::InvalidInput, "data matrix needs columns");
  const std::size_t len = columns_.front().size();
  for (const MVector& c : columns_) {
    if (c.size() != len) throw Error(ErrorKind::DimensionMismatch, "data matrix columns differ in length");
  }
  if (columns_.size() != len) {
    throw Error(ErrorKind::DimensionMismatch, "a configuration in R^n needs exactly n+2 spheres");
  }
}

DataMatrix DataMatrix::from_spheres(std::span<const GeneralizedSphere> spheres) {
  std::vector<MVector> cols;
  cols.reserve(spheres.size());
  for (const auto& s : spheres) cols.push_back(pedoe_vector(s));
  return DataMatrix(std::move(cols));
}

Matrix DataMatrix::matrix() const {
  const std::size_t n = columns_.size();
  Matrix a(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) a(i, j) = columns_[j][i];
  return a;
}

Vector DataMatrix::row(std::size_t i) const {
  Vector r(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) r[j] = columns_[j][i];
  return r;
}

ConfigurationMatrix::ConfigurationMatrix(SymMatrix f, double cond_limit)
    : f_(std::move(f)), inertia_(pedoe::inertia(f_)) {
  try {
    F_ = invert_symmetric(f_, cond_limit);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Singular) throw;
  }
}

const SymMatrix& ConfigurationMatrix::inverse() const {
  if (!F_) throw Error(ErrorKind::Singular, "configuration matrix is singular (spheres are linearly dependent)");
  return *F_;
}

SymMatrix gram_matrix(std::span<const MVector> vectors) {
  SymMatrix f(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) f.set(i, j, inner(vectors[i], vectors[j]));
  return f;
}

ConfigurationMatrix gram(std::span<const GeneralizedSphere> spheres) {
  const DataMatrix a = DataMatrix::from_spheres(spheres);
  return ConfigurationMatrix(gram_matrix(a.columns()));
}

namespace {

// A F A^T evaluated in extended precision. The identity holds exactly for any
// invertible A, so the residual is pure evaluation error, of order
// cond(A)^2 * unit roundoff. Circles of radius 1e-4 put entries near 1e4 into
// A even when f itself is perfectly conditioned; in double that shows up as
// ~1e-7 and in 80-bit long double still as ~1e-6. Quad precision, where the
// compiler has it, leaves the reported residual at the level of the data.
#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

Wide wabs(Wide x) { return x < 0 ? -x : x; }

std::vector<std::vector<Wide>> wide_duals(const DataMatrix& data) {
  const auto& cols = data.columns();
  const std::size_t n = cols.size();
  auto inner_w = [&](const MVector& v, const MVector& w) {
    Wide s = (Wide(v[0]) * w[1] + Wide(v[1]) * w[0]) / 2;
    for (std::size_t k = 2; k < n; ++k) s -= Wide(v[k]) * w[k];
    return s;
  };

  // [f | I] -> [I | F], Gauss-Jordan with partial pivoting
  std::vector<std::vector<Wide>> m(n, std::vector<Wide>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = inner_w(cols[i], cols[j]);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (wabs(m[r][c]) > wabs(m[p][c])) p = r;
    std::swap(m[p], m[c]);
    const Wide piv = m[c][c];
    for (Wide& x : m[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Wide k = m[r][c];
      for (std::size_t j = c; j < 2 * n; ++j) m[r][j] -= k * m[c][j];
    }
  }

  // rows of A are the components across spheres
  std::vector<std::vector<Wide>> fa(n, std::vector<Wide>(n, 0));  // F A^T
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      Wide s = 0;
      for (std::size_t l = 0; l < n; ++l) s += m[k][n + l] * Wide(cols[l][j]);
      fa[k][j] = s;
    }
  std::vector<std::vector<Wide>> out(n, std::vector<Wide>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Wide s = 0;
      for (std::size_t k = 0; k < n; ++k) s += Wide(cols[k][i]) * fa[k][j];
      out[i][j] = s;
    }
  return out;
}

DataMatrix checked_data(std::span<const GeneralizedSphere> spheres) {
  DataMatrix data = DataMatrix::from_spheres(spheres);
  // throws Singular for dependent spheres, same as everywhere else
  ConfigurationMatrix(gram_matrix(data.columns())).inverse();
  return data;
}

}  // namespace

SymMatrix dual_products(std::span<const GeneralizedSphere> spheres) {
  const DataMatrix data = checked_data(spheres);
  const auto d = wide_duals(data);
  SymMatrix out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i; j < d.size(); ++j) out.set(i, j, static_cast<double>((d[i][j] + d[j][i]) / 2));
  return out;
}

double master_residual(std::span<const GeneralizedSphere> spheres) {
  const DataMatrix data = checked_data(spheres);
  const auto d = wide_duals(data);
  const SymMatrix G = metric_inverse(data.ambient_dim());
  double worst = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      worst = std::max(worst, static_cast<double>(wabs(d[i][j] - Wide(G(i, j)))));
  return worst;
}

const char* to_string(Realizability r) {
  switch (r) {
    case Realizability::Realizable: return "Realizable";
    case Realizability::NotRealizable: return "NotRealizable";
    case Realizability::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

Realizability realizable(const SymMatrix& f, double zero_tol) {
  if (f.dim() < 3) throw Error(ErrorKind::InvalidInput, "configuration matrices have size n+2 >= 3");
  const Inertia in = inertia(f, zero_tol);
  if (in.zero > 0) return Realizability::Degenerate;
  if (in.positive == 1 && in.negative == f.dim() - 1) return Realizability::Realizable;
  return Realizability::NotRealizable;
}

Realizability realizable(const SymMatrix& f) { return realizable(f, kDefaultZeroTolScale * f.max_abs()); }

}  // namespace pedoe
