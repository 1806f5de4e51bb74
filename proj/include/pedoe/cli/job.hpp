#pragma once

// JSON job files shared by every subcommand:
//
//   {
//     "dimension": 2,
//     "spheres": [ {"center": [0, 0], "radius": 1},
//                  {"normal": [0, 1], "offset": 1} ],
//     "constraints": [1, "internal", "orthogonal", "angle:60", "distance:3"],
//     "target_radius": 0.5,
//     "solutions": [ ... same shape as spheres ... ],
//     "gram": [[-1, "external", ...], ...],
//     "tolerance": 1e-9
//   }
//
// Radii are signed. Relation names are case-insensitive. "distance:<d>"
// means the unknown's center is at distance d from the known one; it needs
// "target_radius", the intended radius of the unknown.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "json.hpp"

#include "pedoe/geometry.hpp"
#include "pedoe/linalg.hpp"

namespace pedoe::cli {

struct JobSpec {
  std::size_t dimension = 2;
  std::vector<GeneralizedSphere> spheres;
  std::vector<GeneralizedSphere> solutions;
  std::optional<std::vector<double>> constraints;
  std::optional<SymMatrix> gram;
  std::optional<double> tolerance;
};

/// dim_flag is the --dim value if the user passed one. Errors are reported as
/// pedoe::Error with kind InvalidInput or DimensionMismatch.
JobSpec parse_job(const nlohmann::json& doc, std::optional<std::size_t> dim_flag = std::nullopt);
JobSpec load_job(const std::filesystem::path& path, std::optional<std::size_t> dim_flag = std::nullopt);

/// Translates a named relation or number to a Pedoe product target.
/// `known` and `target_radius` are needed only for "distance:<d>".
double parse_relation(const nlohmann::json& item, const GeneralizedSphere* known = nullptr,
                      std::optional<double> target_radius = std::nullopt);

GeneralizedSphere parse_sphere(const nlohmann::json& item, std::size_t dimension);

/// Magnitudes below this print as 0 in the default (9-digit) output.
inline constexpr double kOutputZero = 1e-12;

/// Rounds to 9 significant digits unless full precision is requested; -0
/// becomes 0 either way.
double output_number(double x, bool full_precision);
nlohmann::json sphere_to_json(const GeneralizedSphere& s, bool full_precision);

}  // namespace pedoe::cli
