#include "pedoe/gasket.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <tuple>

#include "pedoe/error.hpp"
#include "pedoe/solver.hpp"

namespace pedoe {

namespace {

struct Pending {
  std::array<int, 3> triple;
  int opposite;
};

double distance(const MVector& a, const MVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Nine significant digits: mirror-image circles have curvatures equal only up
// to rounding, and ordering them by that noise would make the output depend
// on how the arithmetic happened to round.
double quantize(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  const double q = std::strtod(buf, nullptr);
  return std::abs(q) < 1e-12 ? 0.0 : q;
}

// Curvature first, then position, for a traversal-independent order.
auto sort_key(const GeneralizedSphere& s) {
  std::vector<double> where;
  if (const auto* sp = std::get_if<Sphere>(&s)) {
    where = sp->center();
  } else if (const auto* h = std::get_if<Hyperplane>(&s)) {
    where = h->normal();
    where.push_back(h->offset());
  }
  for (double& x : where) x = quantize(x);
  return std::make_tuple(quantize(curvature(s)), std::move(where));
}

}  // namespace

std::vector<GasketCircle> apollonian_gasket(std::span<const GeneralizedSphere> seeds, double max_curvature,
                                            std::size_t max_circles) {
  if (seeds.size() != 3 || dimension(seeds[0]) != 2) {
    throw Error(ErrorKind::InvalidInput, "a gasket is grown from three mutually tangent circles");
  }

  // Inclusive up to rounding: the mirror images of an integer packing land on
  // either side of an integer bound.
  const double bound = max_curvature + 1e-9 * std::max(1.0, std::abs(max_curvature));

  std::vector<GasketCircle> circles;
  std::vector<MVector> vecs;
  for (const auto& s : seeds) {
    circles.push_back({s, {-1, -1, -1}});
    vecs.push_back(pedoe_vector(s));
  }

  std::deque<Pending> queue;
  auto add = [&](const Solution& sol, const std::array<int, 3>& parents) {
    const int idx = static_cast<int>(circles.size());
    circles.push_back({sol.sphere, parents});
    vecs.push_back(sol.vector);
    const auto [a, b, c] = parents;
    queue.push_back({{a, b, idx}, c});
    queue.push_back({{a, c, idx}, b});
    queue.push_back({{b, c, idx}, a});
  };

  const SolveResult first = soddy_circles(seeds);
  for (const Solution& sol : first.solutions) {
    if (sol.vector.curvature() <= bound && circles.size() < max_circles) add(sol, {0, 1, 2});
  }

  const ConstraintRow external = ConstraintRow::uniform(3, relation::kExternal);
  while (!queue.empty() && circles.size() < max_circles) {
    const Pending p = queue.front();
    queue.pop_front();
    const std::array<GeneralizedSphere, 3> triple{circles[p.triple[0]].sphere, circles[p.triple[1]].sphere,
                                                  circles[p.triple[2]].sphere};
    const SolveResult r = complete_configuration(triple, external);
    // One root is the circle on the other side of the triple; take the one
    // farthest from it.
    const Solution* pick = nullptr;
    double best = -1.0;
    for (const Solution& sol : r.solutions) {
      const double d = distance(sol.vector, vecs[p.opposite]);
      if (d > best) {
        best = d;
        pick = &sol;
      }
    }
    if (pick == nullptr || best <= 1e-8 * std::max(1.0, vecs[p.opposite].max_abs())) continue;
    if (pick->vector.curvature() > bound) continue;
    add(*pick, p.triple);
  }

  std::vector<std::size_t> order(circles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return sort_key(circles[i].sphere) < sort_key(circles[j].sphere);
  });
  std::vector<int> position(circles.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<int>(k);

  std::vector<GasketCircle> sorted;
  sorted.reserve(circles.size());
  for (std::size_t k : order) {
    GasketCircle c = circles[k];
    for (int& parent : c.parents) {
      if (parent >= 0) parent = position[static_cast<std::size_t>(parent)];
    }
    sorted.push_back(std::move(c));
  }
  return sorted;
}

}  // namespace pedoe
