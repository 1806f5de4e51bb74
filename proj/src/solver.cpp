#include "pedoe/solver.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <string>

#include "pedoe/error.hpp"

namespace pedoe {

namespace {

constexpr double kCoincidence = 1e-8;
constexpr double kTangencyTol = 1e-8;

double euclid_norm(const MVector& v) {
  double s = 0.0;
  for (double x : v.components()) s += x * x;
  return std::sqrt(s);
}

bool same_vector(const MVector& a, const MVector& b) {
  return euclid_norm(a - b) <= kCoincidence * std::max(1.0, euclid_norm(b));
}

// Same sphere regardless of orientation.
bool same_ray(const MVector& a, const MVector& b) { return same_vector(a, b) || same_vector(-a, b); }

// Roots of q2 s^2 + q1 s + q0 = 0. A leading coefficient that is negligible
// against the others switches to the linear equation.
std::vector<double> quadratic_roots(double q2, double q1, double q0, double& discriminant) {
  if (std::abs(q2) <= 1e-12 * std::max({std::abs(q1), std::abs(q0), 1.0})) {
    discriminant = q1 * q1;
    if (std::abs(q1) <= 1e-12 * std::max(std::abs(q0), 1.0)) {
      if (std::abs(q0) <= 1e-12) {
        throw Error(ErrorKind::DependentKnowns, "every point of the solution line satisfies the constraints");
      }
      throw NoRealSolutionError("constraints are contradictory", discriminant);
    }
    return {-q0 / q1};
  }
  discriminant = q1 * q1 - 4.0 * q2 * q0;
  const double disc_tol = 1e-12 * std::max({q1 * q1, std::abs(4.0 * q2 * q0), 1e-300});
  if (discriminant < -disc_tol) {
    throw NoRealSolutionError("no real sphere satisfies the constraints", discriminant);
  }
  if (discriminant <= disc_tol) return {-q1 / (2.0 * q2)};
  const double t = -0.5 * (q1 + std::copysign(std::sqrt(discriminant), q1));
  return {t / q2, q0 / t};
}

void require_tangent(std::span<const GeneralizedSphere> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double p = pedoe_product(s[i], s[j]);
      if (std::abs(p - 1.0) > kTangencyTol) {
        throw Error(ErrorKind::NotTangent, "spheres " + std::to_string(i) + " and " + std::to_string(j) +
                                               " are not externally tangent (product " + std::to_string(p) + ")");
      }
    }
}

// Newton steps on <C_i, x> = t_i, <x, x> = -1 with the knowns' vectors and
// the residuals in extended precision. Small circles far from the origin
// give vectors with entries near 1e3, and rounding those to double alone
// costs more digits of the solution than the input data justifies. A step is
// kept only if it lowers the residual, so double roots (singular Jacobian)
// are left alone.
using Wide = long double;
using WideVector = std::vector<Wide>;

WideVector wide_vector(const GeneralizedSphere& s) {
  WideVector v;
  if (const auto* sp = std::get_if<Sphere>(&s)) {
    const Wide r = sp->radius();
    Wide p2 = 0;
    for (double x : sp->center()) p2 += Wide(x) * x;
    v = {1 / r, (p2 - r * r) / r};
    for (double x : sp->center()) v.push_back(Wide(x) / r);
  } else {
    const MVector m = pedoe_vector(s);  // hyperplanes: exact already
    for (double x : m.components()) v.push_back(x);
  }
  return v;
}

Wide wide_inner(const WideVector& v, const WideVector& w) {
  Wide s = (v[0] * w[1] + v[1] * w[0]) / 2;
  for (std::size_t k = 2; k < v.size(); ++k) s -= v[k] * w[k];
  return s;
}

WideVector widen(const MVector& x) {
  WideVector v;
  for (double c : x.components()) v.push_back(c);
  return v;
}

WideVector equations(const std::vector<WideVector>& known, const ConstraintRow& row, const WideVector& x) {
  WideVector f;
  for (std::size_t i = 0; i < known.size(); ++i) f.push_back(wide_inner(known[i], x) - Wide(row[i]));
  f.push_back((wide_inner(x, x) + 1) / 2);
  return f;
}

Wide worst(const WideVector& f) {
  Wide m = 0;
  for (Wide v : f) m = std::max(m, std::abs(v));
  return m;
}

WideVector refine(const std::vector<WideVector>& known, const ConstraintRow& row, const MVector& start) {
  WideVector x = widen(start);
  const std::size_t m = x.size();
  for (int step = 0; step < 3; ++step) {
    const WideVector f = equations(known, row, x);
    const Wide before = worst(f);
    if (before == 0) break;

    // Jacobian rows (g C_i)^T and (g x)^T, augmented with -f
    std::vector<WideVector> a(m, WideVector(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      const WideVector& c = i + 1 < m ? known[i] : x;
      a[i][0] = c[1] / 2;
      a[i][1] = c[0] / 2;
      for (std::size_t k = 2; k < m; ++k) a[i][k] = -c[k];
      a[i][m] = -f[i];
    }
    bool singular = false;
    for (std::size_t col = 0; col < m; ++col) {
      std::size_t p = col;
      for (std::size_t r = col + 1; r < m; ++r)
        if (std::abs(a[r][col]) > std::abs(a[p][col])) p = r;
      if (a[p][col] == 0) {
        singular = true;
        break;
      }
      std::swap(a[p], a[col]);
      for (std::size_t r = col + 1; r < m; ++r) {
        const Wide k = a[r][col] / a[col][col];
        for (std::size_t j = col; j <= m; ++j) a[r][j] -= k * a[col][j];
      }
    }
    if (singular) break;
    WideVector next(m);
    for (std::size_t i = m; i-- > 0;) {
      Wide s = a[i][m];
      for (std::size_t j = i + 1; j < m; ++j) s -= a[i][j] * next[j];
      next[i] = s / a[i][i];
    }
    for (std::size_t i = 0; i < m; ++i) next[i] += x[i];
    if (!(worst(equations(known, row, next)) < before)) break;
    x = std::move(next);
  }
  return x;
}

MVector narrow(const WideVector& x) {
  std::vector<double> out;
  for (Wide c : x) out.push_back(static_cast<double>(c));
  return MVector(out);
}

// A refined proper sphere is read straight off the wide vector. Rounding it
// to double first and renormalizing would move the curvature by the rounding
// of the co-curvature, which is the largest entry.
GeneralizedSphere to_sphere(const WideVector& x, double tol) {
  const MVector v = narrow(x);
  if (classify_ray(v, tol) != RayClass::ProperSphere) return sphere_from_vector(v, tol);
  std::vector<double> center;
  for (std::size_t k = 2; k < x.size(); ++k) center.push_back(static_cast<double>(x[k] / x[0]));
  return Sphere(std::move(center), static_cast<double>(1 / x[0]));
}

std::string lower_dashed(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c == '_') c = '-';
  }
  return out;
}

}  // namespace

ConstraintRow::ConstraintRow(std::vector<double> targets) : targets_(std::move(targets)) {
  for (double t : targets_) {
    if (!std::isfinite(t)) throw Error(ErrorKind::InvalidInput, "constraint target must be finite");
  }
}

ConstraintRow ConstraintRow::uniform(std::size_t count, double value) {
  return ConstraintRow(std::vector<double>(count, value));
}

namespace relation {

double angle(double radians) { return std::cos(radians); }

double from_distance(double distance, double r1, double r2) {
  if (r1 == 0.0 || r2 == 0.0) throw Error(ErrorKind::InvalidInput, "radii must be nonzero");
  return (distance * distance - r1 * r1 - r2 * r2) / (2.0 * r1 * r2);
}

}  // namespace relation

SolveResult complete_configuration(std::span<const GeneralizedSphere> known, const ConstraintRow& row,
                                   const SolveOptions& options) {
  if (known.empty()) throw Error(ErrorKind::InvalidInput, "no known spheres");
  const std::size_t n = dimension(known.front());
  for (const auto& s : known) {
    if (dimension(s) != n) throw Error(ErrorKind::DimensionMismatch, "known spheres differ in dimension");
  }
  if (known.size() != n + 1) {
    throw Error(ErrorKind::DimensionMismatch, "completing a configuration in R^" + std::to_string(n) + " needs " +
                                                  std::to_string(n + 1) + " known spheres");
  }
  if (row.size() != known.size()) {
    throw Error(ErrorKind::DimensionMismatch, "constraint row length differs from the number of known spheres");
  }

  std::vector<MVector> vecs;
  vecs.reserve(known.size());
  for (const auto& s : known) vecs.push_back(pedoe_vector(s));

  // <C_i, x> = C_i^T g x; each equation is scaled to unit length so the rank
  // decision does not depend on how far the knowns sit from the origin.
  Matrix eqs(n + 1, n + 2);
  std::vector<double> rhs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const MVector& c = vecs[i];
    double len = 0.0;
    std::vector<double> r(n + 2);
    r[0] = 0.5 * c[1];
    r[1] = 0.5 * c[0];
    for (std::size_t k = 2; k < n + 2; ++k) r[k] = -c[k];
    for (double x : r) len += x * x;
    len = std::sqrt(len);
    for (std::size_t k = 0; k < n + 2; ++k) eqs(i, k) = r[k] / len;
    rhs[i] = row[i] / len;
  }

  AffineSolution lin;
  try {
    lin = solve_affine(eqs, rhs);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Inconsistent) throw;
    throw Error(ErrorKind::DependentKnowns, "known spheres are linearly dependent");
  }
  if (lin.kernel.size() != 1) throw Error(ErrorKind::DependentKnowns, "known spheres are linearly dependent");

  const MVector xp(lin.particular);
  const MVector k(lin.kernel.front());
  const double q2 = norm_sq(k);
  const double q1 = 2.0 * inner(xp, k);
  const double q0 = norm_sq(xp) + 1.0;

  std::vector<WideVector> wide;
  for (const auto& s : known) wide.push_back(wide_vector(s));

  SolveResult result;
  const std::vector<double> roots = quadratic_roots(q2, q1, q0, result.discriminant);

  for (double s : roots) {
    const WideVector xw = refine(wide, row, xp + s * k);
    const MVector x = narrow(xw);
    GeneralizedSphere sphere = to_sphere(xw, options.ray_tol);
    const MVector v = std::holds_alternative<PointShape>(sphere) ? x : pedoe_vector(sphere);

    const bool is_known = std::any_of(vecs.begin(), vecs.end(), [&](const MVector& c) { return same_ray(v, c); });
    if (is_known) {
      result.coincident.push_back(std::move(sphere));
      continue;
    }
    const bool repeated = std::any_of(result.solutions.begin(), result.solutions.end(),
                                      [&](const Solution& sol) { return same_vector(v, sol.vector); });
    if (repeated) continue;

    double residual = 0.0;
    for (std::size_t i = 0; i <= n; ++i) residual = std::max(residual, std::abs(inner(vecs[i], v) - row[i]));
    result.solutions.push_back(Solution{std::move(sphere), v, residual});
  }

  std::stable_sort(result.solutions.begin(), result.solutions.end(),
                   [](const Solution& a, const Solution& b) { return a.vector.curvature() > b.vector.curvature(); });
  return result;
}

SymMatrix apollonius_matrix(const Sphere& c1, const Sphere& c2, const Sphere& c3, const Signs& signs) {
  const std::array<const Sphere*, 3> cs{&c1, &c2, &c3};
  SymMatrix f(4);
  for (std::size_t i = 0; i < 3; ++i) {
    f.set(i, i, -1.0);
    for (std::size_t j = i + 1; j < 3; ++j) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < cs[i]->dim(); ++k) {
        const double dx = cs[i]->center()[k] - cs[j]->center()[k];
        d2 += dx * dx;
      }
      f.set(i, j, relation::from_distance(std::sqrt(d2), cs[i]->radius(), cs[j]->radius()));
    }
    f.set(i, 3, static_cast<double>(signs[i]));
  }
  f.set(3, 3, -1.0);
  return f;
}

SolveResult apollonius(const Sphere& c1, const Sphere& c2, const Sphere& c3, const Signs& signs,
                       const SolveOptions& options) {
  if (c1.dim() != 2 || c2.dim() != 2 || c3.dim() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "the Apollonius solver works on planar circles");
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidInput, "Apollonius signs must be +1 or -1");
  }
  const std::array<GeneralizedSphere, 3> known{c1, c2, c3};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (same_ray(pedoe_vector(known[i]), pedoe_vector(known[j]))) {
        throw Error(ErrorKind::InvalidInput, "Apollonius circles must be distinct");
      }
  return complete_configuration(known, ConstraintRow({double(signs[0]), double(signs[1]), double(signs[2])}),
                                options);
}

std::vector<ApolloniusCase> apollonius_all(const Sphere& c1, const Sphere& c2, const Sphere& c3,
                                           const SolveOptions& options) {
  std::vector<ApolloniusCase> cases;
  std::vector<MVector> seen;
  for (int mask = 0; mask < 8; ++mask) {
    const Signs signs{(mask & 4) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 1) ? -1 : 1};
    ApolloniusCase c{signs, {}, true};
    try {
      c.result = apollonius(c1, c2, c3, signs, options);
    } catch (const NoRealSolutionError& e) {
      c.solvable = false;
      c.result.discriminant = e.discriminant();
    }
    std::erase_if(c.result.solutions, [&](const Solution& s) {
      return std::any_of(seen.begin(), seen.end(), [&](const MVector& v) { return same_ray(s.vector, v); });
    });
    for (const Solution& s : c.result.solutions) seen.push_back(s.vector);
    cases.push_back(std::move(c));
  }
  return cases;
}

SolveResult soddy_circles(std::span<const GeneralizedSphere> tangent, const SolveOptions& options) {
  require_tangent(tangent);
  return complete_configuration(tangent, ConstraintRow::uniform(tangent.size(), relation::kExternal), options);
}

SolveResult orthogonal_circle(std::span<const GeneralizedSphere> tangent, const SolveOptions& options) {
  require_tangent(tangent);
  return complete_configuration(tangent, ConstraintRow::uniform(tangent.size(), relation::kOrthogonal), options);
}

std::vector<double> curvature_solve(const SymMatrix& F, std::span<const double> known_b) {
  const std::size_t m = known_b.size();
  if (F.dim() != m + 1) throw Error(ErrorKind::DimensionMismatch, "F must be one larger than the known curvatures");
  const double q2 = F(m, m);
  double q1 = 0.0;
  double q0 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    q1 += 2.0 * F(m, i) * known_b[i];
    for (std::size_t j = 0; j < m; ++j) q0 += known_b[i] * F(i, j) * known_b[j];
  }
  double disc = 0.0;
  std::vector<double> roots = quadratic_roots(q2, q1, q0, disc);
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

Family parse_family(std::string_view name) {
  const std::string s = lower_dashed(name);
  if (s == "descartes") return Family::Descartes;
  if (s == "soddy-gossett") return Family::SoddyGossett;
  if (s == "orthogonal-triple") return Family::OrthogonalTriple;
  if (s == "orthogonal-pair") return Family::OrthogonalPair;
  throw Error(ErrorKind::UnknownFamily, "unknown configuration family '" + std::string(name) + "'");
}

double family_identity_residual(Family family, std::span<const double> b) {
  auto need = [&](std::size_t count) {
    if (b.size() != count) {
      throw Error(ErrorKind::InvalidInput, "family identity expects " + std::to_string(count) + " curvatures");
    }
  };
  switch (family) {
    case Family::Descartes:
      need(4);
      [[fallthrough]];
    case Family::SoddyGossett: {
      if (b.size() < 3) throw Error(ErrorKind::InvalidInput, "Soddy-Gossett identity needs n+2 >= 3 curvatures");
      const double n = static_cast<double>(b.size() - 2);
      double sum = 0.0;
      double sum_sq = 0.0;
      for (double x : b) {
        sum += x;
        sum_sq += x * x;
      }
      return std::abs(sum * sum - n * sum_sq);
    }
    case Family::OrthogonalTriple: {
      need(4);
      const double s = b[0] + b[1] + b[2] + b[3];
      return std::abs(2.0 * (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]) - s * s);
    }
    case Family::OrthogonalPair: {
      need(4);
      const double cd = b[2] - b[3];
      const double s = 2.0 * b[0] + 2.0 * b[1] + b[2] + b[3];
      return std::abs(2.0 * (4.0 * b[0] * b[0] + 4.0 * b[1] * b[1] + cd * cd) - s * s);
    }
  }
  throw Error(ErrorKind::UnknownFamily, "unknown configuration family");
}

}  // namespace pedoe
