#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pedoe/geometry.hpp"

namespace pedoe {

struct GasketCircle {
  GeneralizedSphere sphere;
  /// Indices (into the returned vector) of the three circles it was solved
  /// from; -1 for the three seeds.
  std::array<int, 3> parents;
};

/// Apollonian packing grown from three mutually tangent circles. Every new
/// circle is a Soddy circle of a tangent triple already in the packing;
/// circles with signed curvature above max_curvature (beyond rounding) are
/// not added, and growth stops after max_circles. The result is sorted by curvature
/// (ascending, ties by center) so it does not depend on traversal order.
std::vector<GasketCircle> apollonian_gasket(std::span<const GeneralizedSphere> seeds, double max_curvature,
                                            std::size_t max_circles = 100000);

}  // namespace pedoe
