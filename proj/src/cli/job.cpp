#include "pedoe/cli/job.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <string>

#include "pedoe/error.hpp"
#include "pedoe/solver.hpp"

namespace pedoe::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad_input(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

double number(const json& j, const std::string& what) {
  if (!j.is_number()) bad_input(what + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) bad_input(what + " must be finite");
  return x;
}

std::vector<double> coordinates(const json& j, std::size_t dimension, const std::string& what) {
  if (!j.is_array()) bad_input(what + " must be an array");
  if (j.size() != dimension) {
    throw Error(ErrorKind::DimensionMismatch,
                what + " has " + std::to_string(j.size()) + " coordinates, expected " + std::to_string(dimension));
  }
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number(x, what));
  return out;
}

double parse_real(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(x)) {
    bad_input("cannot read a number from '" + text + "' in " + what);
  }
  return x;
}

std::vector<GeneralizedSphere> sphere_list(const json& doc, const char* key, std::size_t dimension) {
  std::vector<GeneralizedSphere> out;
  if (!doc.contains(key)) return out;
  const json& list = doc.at(key);
  if (!list.is_array()) bad_input(std::string(key) + " must be an array");
  for (const auto& item : list) out.push_back(parse_sphere(item, dimension));
  return out;
}

}  // namespace

GeneralizedSphere parse_sphere(const json& item, std::size_t dimension) {
  if (!item.is_object()) bad_input("each sphere must be a JSON object");
  if (item.contains("center")) {
    if (!item.contains("radius")) bad_input("sphere with a center needs a radius");
    return Sphere(coordinates(item.at("center"), dimension, "center"), number(item.at("radius"), "radius"));
  }
  if (item.contains("normal")) {
    if (!item.contains("offset")) bad_input("hyperplane needs an offset");
    return Hyperplane(coordinates(item.at("normal"), dimension, "normal"), number(item.at("offset"), "offset"));
  }
  if (item.contains("point")) return PointShape(coordinates(item.at("point"), dimension, "point"));
  bad_input("sphere entries need {center, radius}, {normal, offset} or {point}");
}

double parse_relation(const json& item, const GeneralizedSphere* known, std::optional<double> target_radius) {
  if (item.is_number()) return number(item, "constraint");
  if (!item.is_string()) bad_input("constraints must be numbers or relation names");
  std::string s = item.get<std::string>();
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

  if (s == "external") return relation::kExternal;
  if (s == "internal") return relation::kInternal;
  if (s == "orthogonal") return relation::kOrthogonal;
  if (s.rfind("angle:", 0) == 0) {
    const double deg = parse_real(s.substr(6), "angle relation");
    return relation::angle(deg * std::numbers::pi / 180.0);
  }
  if (s.rfind("distance:", 0) == 0) {
    const double d = parse_real(s.substr(9), "distance relation");
    if (d < 0.0) bad_input("distance must be nonnegative");
    const auto* sphere = known ? std::get_if<Sphere>(known) : nullptr;
    if (sphere == nullptr) bad_input("distance relation needs a known sphere with a radius");
    if (!target_radius) bad_input("distance relation needs \"target_radius\"");
    return relation::from_distance(d, sphere->radius(), *target_radius);
  }
  bad_input("unknown relation '" + item.get<std::string>() + "'");
}

JobSpec parse_job(const json& doc, std::optional<std::size_t> dim_flag) {
  if (!doc.is_object()) bad_input("job file must contain a JSON object");
  JobSpec job;
  if (doc.contains("dimension")) {
    const json& d = doc.at("dimension");
    if (!d.is_number_integer() || d.get<long long>() < 1) bad_input("dimension must be a positive integer");
    job.dimension = d.get<std::size_t>();
    if (dim_flag && *dim_flag != job.dimension) {
      throw Error(ErrorKind::DimensionMismatch, "--dim disagrees with the job's dimension");
    }
  } else if (dim_flag) {
    job.dimension = *dim_flag;
  }

  job.spheres = sphere_list(doc, "spheres", job.dimension);
  job.solutions = sphere_list(doc, "solutions", job.dimension);

  if (doc.contains("tolerance")) {
    job.tolerance = number(doc.at("tolerance"), "tolerance");
    if (!(*job.tolerance > 0.0)) bad_input("tolerance must be positive");
  }

  std::optional<double> target_radius;
  if (doc.contains("target_radius")) {
    target_radius = number(doc.at("target_radius"), "target_radius");
    if (*target_radius == 0.0) bad_input("target_radius must be nonzero");
  }

  if (doc.contains("constraints")) {
    const json& list = doc.at("constraints");
    if (!list.is_array()) bad_input("constraints must be an array");
    std::vector<double> row;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const GeneralizedSphere* known = i < job.spheres.size() ? &job.spheres[i] : nullptr;
      row.push_back(parse_relation(list[i], known, target_radius));
    }
    job.constraints = std::move(row);
  }

  if (doc.contains("gram")) {
    const json& rows = doc.at("gram");
    if (!rows.is_array() || rows.empty()) bad_input("gram must be a non-empty array of rows");
    const std::size_t m = rows.size();
    std::vector<double> entries;
    for (const auto& r : rows) {
      if (!r.is_array() || r.size() != m) bad_input("gram must be square");
      for (const auto& x : r) entries.push_back(parse_relation(x));
    }
    Matrix raw(m, m, std::move(entries));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (std::abs(raw(i, j) - raw(j, i)) > 1e-12 * std::max(1.0, std::abs(raw(i, j)))) {
          bad_input("gram must be symmetric");
        }
    job.gram = SymMatrix(raw);
  }
  return job;
}

JobSpec load_job(const std::filesystem::path& path, std::optional<std::size_t> dim_flag) {
  std::ifstream in(path);
  if (!in) bad_input("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    bad_input("malformed JSON in " + path.string() + ": " + e.what());
  }
  return parse_job(doc, dim_flag);
}

double output_number(double x, bool full_precision) {
  if (x == 0.0) return 0.0;
  if (full_precision) return x;
  // Below this the digits are rounding noise and would make output depend on codegen.
  if (std::abs(x) < kOutputZero) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json sphere_to_json(const GeneralizedSphere& s, bool full) {
  auto coords = [&](const std::vector<double>& xs) {
    json a = json::array();
    for (double x : xs) a.push_back(output_number(x, full));
    return a;
  };
  json out = json::object();
  if (const auto* sp = std::get_if<Sphere>(&s)) {
    out["center"] = coords(sp->center());
    out["radius"] = output_number(sp->radius(), full);
  } else if (const auto* h = std::get_if<Hyperplane>(&s)) {
    out["normal"] = coords(h->normal());
    out["offset"] = output_number(h->offset(), full);
  } else {
    out["point"] = coords(std::get<PointShape>(s).location());
  }
  return out;
}

}  // namespace pedoe::cli
