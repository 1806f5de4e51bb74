#pragma once

#include <span>
#include <string>

#include "pedoe/geometry.hpp"

namespace pedoe::cli {

/// SVG 1.1 drawing of planar circles and lines. Knowns are stroked solid and
/// solutions dashed; circles are drawn at |r|; lines are clipped to the view
/// box. Output is a pure function of the input. Throws Error(Unsupported) for
/// anything that is not planar.
std::string render_svg(std::span<const GeneralizedSphere> knowns, std::span<const GeneralizedSphere> solutions,
                       double width = 800.0);

}  // namespace pedoe::cli
