#include "doctest.h"
#include "pedoe/configuration.hpp"
#include "pedoe/solver.hpp"
#include "support.hpp"

using namespace pedoe;
using testing::kRoot3;
using testing::max_diff;
using testing::sym;

namespace {

std::vector<GeneralizedSphere> descartes_quadruple() {
  auto q = testing::unit_triple();
  q.push_back(Sphere({1.0, 1.0 / kRoot3}, 1.0 / (3 + 2 * kRoot3)));
  return q;
}

std::vector<GeneralizedSphere> orthogonal_quadruple() {
  auto q = testing::unit_triple();
  q.push_back(Sphere({1.0, 1.0 / kRoot3}, 1.0 / kRoot3));
  return q;
}

// Quadratic form v^T F w.
double form(const SymMatrix& F, std::span<const double> v, std::span<const double> w) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) s += v[i] * F(i, j) * w[j];
  return s;
}

// n+2 random spheres and planes in R^n with a well-conditioned Gram matrix.
std::vector<GeneralizedSphere> random_configuration(testing::Rng& rng, std::size_t n) {
  for (;;) {
    std::vector<GeneralizedSphere> s;
    for (std::size_t i = 0; i < n + 2; ++i) {
      Sphere c = rng.sphere(n);
      s.push_back(rng.integer(0, 3) == 0 ? GeneralizedSphere(c.flipped()) : GeneralizedSphere(c));
    }
    if (condition_number(gram(s).f()) <= 1e6) return s;
  }
}

}  // namespace

TEST_SUITE("configuration") {

TEST_CASE("descartes quadruple") {
  const ConfigurationMatrix cfg = gram(descartes_quadruple());
  CHECK(max_diff(cfg.f(), testing::descartes_gram(4)) <= 1e-12);
  // f^2 = 4I
  CHECK(max_diff(cfg.inverse(), 0.25 * testing::descartes_gram(4)) <= 1e-12);
  CHECK(cfg.inertia() == Inertia{1, 3, 0});
}

TEST_CASE("orthogonal circle quadruple") {
  const auto q = orthogonal_quadruple();
  const std::vector<MVector> expected{{1, -1, 0, 0}, {1, 3, 2, 0}, {1, 3, 1, kRoot3}, {kRoot3, kRoot3, kRoot3, 1}};
  for (std::size_t i = 0; i < 4; ++i) CHECK(max_diff(pedoe_vector(q[i]), expected[i]) <= 1e-14);

  // The printed matrix has f_23 = 0 but f_32 = 1; only the symmetric version
  // with a 1 there is a Gram matrix, and it is the one the printed inverse
  // belongs to.
  const SymMatrix f = sym(4, {-1, 1, 1, 0, 1, -1, 1, 0, 1, 1, -1, 0, 0, 0, 0, -1});
  const SymMatrix F = 0.5 * sym(4, {0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, -2});
  const ConfigurationMatrix cfg = gram(q);
  CHECK(max_diff(cfg.f(), f) <= 1e-12);
  CHECK(max_diff(cfg.inverse(), F) <= 1e-12);
}

TEST_CASE("repeated circle gives a singular configuration") {
  auto q = testing::unit_triple();
  q.push_back(q[0]);
  const ConfigurationMatrix cfg = gram(q);
  CHECK_FALSE(cfg.invertible());
  CHECK(testing::error_kind([&] { (void)cfg.inverse(); }) == ErrorKind::Singular);
  CHECK(testing::error_kind([&] { master_residual(q); }) == ErrorKind::Singular);
  CHECK(testing::error_kind([&] { dual_products(q); }) == ErrorKind::Singular);
  CHECK(realizable(cfg.f()) == Realizability::Degenerate);
}

TEST_CASE("gram rejects points and wrong counts") {
  auto q = testing::unit_triple();
  q.push_back(PointShape({5.0, 5.0}));
  CHECK(testing::error_kind([&] { gram(q); }) == ErrorKind::ImproperCircle);
  CHECK(testing::error_kind([] { gram(testing::unit_triple()); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("master identity on the worked quadruples") {
  CHECK(master_residual(descartes_quadruple()) <= 1e-9);
  CHECK(master_residual(orthogonal_quadruple()) <= 1e-9);
  auto moved = descartes_quadruple();
  moved[1] = Sphere({2.1, 0.0}, 1.0);
  // the identity holds for any independent quadruple, so moving a circle
  // must not break it
  CHECK(master_residual(moved) <= 1e-9);
}

TEST_CASE("perturbing one column of the data breaks A F A^T = G") {
  // Keep F from the exact quadruple and move one center by 0.1.
  const auto q = descartes_quadruple();
  const SymMatrix F = gram(q).inverse();
  auto moved = q;
  moved[3] = Sphere({1.1, 1.0 / kRoot3}, 1.0 / (3 + 2 * kRoot3));
  const Matrix a = DataMatrix::from_spheres(moved).matrix();
  const double residual = (a * F.matrix() * a.transposed() - metric_inverse(2).matrix()).max_abs();
  CHECK(residual > 1e-3);
}

TEST_CASE("dual products") {
  const SymMatrix dual = dual_products(descartes_quadruple());
  CHECK(std::abs(dual(0, 0)) <= 1e-9);  // b^T F b = 0
  CHECK(max_diff(dual, metric_inverse(2)) <= 1e-9);

  const auto q = orthogonal_quadruple();
  const DataMatrix a = DataMatrix::from_spheres(q);
  const SymMatrix F = gram(q).inverse();
  const std::vector<double> b{1, 1, 1, kRoot3}, xdot{0, 2, 1, kRoot3};
  CHECK(max_diff(a.row(0), b) <= 1e-14);
  CHECK(max_diff(a.row(2), xdot) <= 1e-14);
  CHECK(std::abs(form(F, b, b)) <= 1e-12);
  CHECK(std::abs(form(F, xdot, xdot) + 1.0) <= 1e-12);
  CHECK(std::abs(form(F, b, a.row(1)) - 2.0) <= 1e-12);
  CHECK(max_diff(dual_products(q), metric_inverse(2)) <= 1e-9);
}

TEST_CASE("reduced-position identity of the orthogonal circle carries +1") {
  const auto xdot = DataMatrix::from_spheres(orthogonal_quadruple()).row(2);
  const double lhs = xdot[3] * xdot[3];
  const double rhs = xdot[0] * xdot[1] + xdot[1] * xdot[2] + xdot[2] * xdot[0];
  CHECK(std::abs(lhs - (rhs + 1)) <= 1e-12);
  CHECK(std::abs(lhs - (rhs - 1)) > 1.0);  // the printed -1 does not hold
}

TEST_CASE("realizability") {
  CHECK(realizable(-1.0 * SymMatrix::identity(4)) == Realizability::NotRealizable);
  CHECK(realizable(testing::descartes_gram(4)) == Realizability::Realizable);
  CHECK(realizable(testing::descartes_gram(5)) == Realizability::Realizable);
  const SymMatrix repeated = sym(4, {-1, -1, 1, 1, -1, -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1});
  CHECK(realizable(repeated) == Realizability::Degenerate);
  CHECK(testing::error_kind([] { realizable(SymMatrix::identity(2)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("printed configuration matrices and their inverses") {
  struct Pair {
    std::vector<double> f, F;
    double scale;
  };
  const std::vector<Pair> printed{
      // all-external Descartes, and the one with an enclosing circle (RDR)
      {{-1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1}, {-1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1}, 4},
      {{-1, 1, 1, -1, 1, -1, 1, -1, 1, 1, -1, -1, -1, -1, -1, -1},
       {-1, 1, 1, -1, 1, -1, 1, -1, 1, 1, -1, -1, -1, -1, -1, -1}, 4},
      // three mutually orthogonal circles and one tangent to all of them
      {{-1, 0, 0, -1, 0, -1, 0, -1, 0, 0, -1, -1, -1, -1, -1, -1},
       {-1, 1, 1, -1, 1, -1, 1, -1, 1, 1, -1, -1, -1, -1, -1, 1}, 2},
      {{-1, 0, 0, 1, 0, -1, 0, 1, 0, 0, -1, 1, 1, 1, 1, -1}, {-1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, 1}, 2},
      {{-1, 0, 0, 1, 0, -1, 0, -1, 0, 0, -1, -1, 1, -1, -1, -1},
       {-1, -1, -1, 1, -1, -1, 1, -1, -1, 1, -1, -1, 1, -1, -1, 1}, 2},
      {{-1, 0, 0, -1, 0, -1, 0, 1, 0, 0, -1, 1, -1, 1, 1, -1},
       {-1, -1, -1, -1, -1, -1, 1, 1, -1, 1, -1, 1, -1, 1, 1, 1}, 2},
      // orthogonal pair plus a tangent pair touching both
      {{-1, 0, -1, -1, 0, -1, -1, -1, -1, -1, -1, 1, -1, -1, 1, -1},
       {-4, 4, -2, -2, 4, -4, -2, -2, -2, -2, -1, 3, -2, -2, 3, -1}, 8},
      {{-1, 0, 1, 1, 0, -1, -1, -1, 1, -1, -1, 1, 1, -1, 1, -1},
       {-4, -4, 2, 2, -4, -4, -2, -2, 2, -2, -1, 3, 2, -2, 3, -1}, 8},
      {{-1, 0, 1, -1, 0, -1, 1, -1, 1, 1, -1, -1, -1, -1, -1, -1},
       {-4, 4, 2, -2, 4, -4, 2, -2, 2, 2, -1, -3, -2, -2, -3, -1}, 8},
      {{-1, 0, 1, 1, 0, -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1},
       {-4, 4, 2, 2, 4, -4, 2, 2, 2, 2, -1, 3, 2, 2, 3, -1}, 8},
  };
  for (const Pair& p : printed) {
    const SymMatrix f = sym(4, p.f);
    CHECK(max_diff(invert_symmetric(f), (1.0 / p.scale) * sym(4, p.F)) <= 1e-12);
    CHECK(realizable(f) == Realizability::Realizable);
  }
}

TEST_CASE("enclosing-circle sign trick") {
  // b^T (R D R) b == (R b)^T D (R b), R = diag(1, 1, 1, -1)
  const std::vector<double> r{1, 1, 1, -1};
  const Matrix R = SymMatrix::diagonal(r).matrix();
  const SymMatrix D = testing::descartes_gram(4);
  const SymMatrix RDR(R * D.matrix() * R);
  testing::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<double> b = rng.point(4, -5, 5);
    const std::vector<double> rb = R * std::span<const double>(b);
    CHECK(std::abs(form(RDR, b, b) - form(D, rb, rb)) <= 1e-12 * std::max(1.0, std::abs(form(D, rb, rb))));
  }
  // and on a real configuration: unit triple plus the outer Soddy circle,
  // drawn with positive radius so it encloses the other three
  auto q = testing::unit_triple();
  q.push_back(Sphere({1.0, 1.0 / kRoot3}, 1.0 + 2.0 / kRoot3));
  const ConfigurationMatrix cfg = gram(q);
  CHECK(max_diff(cfg.f(), RDR) <= 1e-12);
  const std::vector<double> bends = DataMatrix::from_spheres(q).row(0);
  CHECK(std::abs(form(cfg.inverse(), bends, bends)) <= 1e-12);
}

TEST_CASE("gram agrees with A^T g A") {
  testing::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    const auto s = random_configuration(rng, n);
    const Matrix a = DataMatrix::from_spheres(s).matrix();
    const Matrix direct = a.transposed() * metric(n).matrix() * a;
    const SymMatrix f = gram(s).f();
    CHECK(max_diff(f.matrix(), direct) <= 1e-12 * std::max(1.0, direct.max_abs()));
    for (std::size_t i = 0; i < n + 2; ++i) CHECK(std::abs(f(i, i) + 1.0) <= 1e-10);
  }
}

TEST_CASE("actual configurations are realizable and satisfy the master identity") {
  testing::Rng rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 2 : 3;
    const auto s = random_configuration(rng, n);
    const ConfigurationMatrix cfg = gram(s);
    CHECK(realizable(cfg.f()) == Realizability::Realizable);
    CHECK(cfg.inertia() == Inertia{1, n + 1, 0});
    CHECK(master_residual(s) <= 1e-8);
    CHECK(max_diff(dual_products(s), metric_inverse(n)) <= 1e-8);
  }
}

TEST_CASE("solver-completed configurations satisfy the master identity") {
  testing::Rng rng(44);
  int built = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 2 : 3;
    std::vector<GeneralizedSphere> known;
    for (std::size_t i = 0; i < n + 1; ++i) known.push_back(rng.sphere(n));
    std::vector<double> targets;
    for (std::size_t i = 0; i < n + 1; ++i) targets.push_back(rng.uniform(-1.5, 1.5));
    SolveResult r;
    try {
      r = complete_configuration(known, ConstraintRow(targets));
    } catch (const Error&) {
      continue;  // no real completion for this row
    }
    for (const Solution& sol : r.solutions) {
      if (std::holds_alternative<PointShape>(sol.sphere)) continue;
      auto all = known;
      all.push_back(sol.sphere);
      ++built;
      CHECK(master_residual(all) <= 1e-8);
      CHECK(max_diff(dual_products(all), metric_inverse(n)) <= 1e-8);
    }
  }
  CHECK(built > 100);
}

}  // TEST_SUITE
