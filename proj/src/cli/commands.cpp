#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pedoe/cli/cli.hpp"
#include "pedoe/cli/job.hpp"
#include "pedoe/cli/svg.hpp"
#include "pedoe/configuration.hpp"
#include "pedoe/gasket.hpp"
#include "pedoe/solver.hpp"

namespace pedoe::cli {

using nlohmann::json;

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoRealSolution:
      return kNoRealSolution;
    case ErrorKind::Singular:
    case ErrorKind::DependentKnowns:
    case ErrorKind::Inconsistent:
    case ErrorKind::ImaginaryCircle:
    case ErrorKind::ZeroVector:
      return kDegenerate;
    default:
      return kInputError;
  }
}

namespace {

struct Options {
  double tol = kDefaultRayTol;
  bool tol_given = false;
  std::optional<std::size_t> dim;
  bool full_precision = false;
  std::string input;
};

std::string fmt9(double x) {
  x = output_number(x, false);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

double tolerance(const Options& o, const JobSpec& job) {
  return o.tol_given ? o.tol : job.tolerance.value_or(o.tol);
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

json solutions_json(const SolveResult& r, bool full) {
  json list = json::array();
  for (const Solution& s : r.solutions) {
    json item = sphere_to_json(s.sphere, full);
    item["residual"] = output_number(s.residual, full);
    list.push_back(std::move(item));
  }
  return list;
}

json curvatures_json(const SolveResult& r, bool full) {
  json list = json::array();
  for (const Solution& s : r.solutions) list.push_back(output_number(s.vector.curvature(), full));
  return list;
}

json spheres_json(const std::vector<GeneralizedSphere>& spheres, bool full) {
  json list = json::array();
  for (const auto& s : spheres) list.push_back(sphere_to_json(s, full));
  return list;
}

void require_count(const JobSpec& job, std::size_t count, const char* what) {
  if (job.spheres.size() != count) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " needs exactly " + std::to_string(count) +
                                             " spheres, got " + std::to_string(job.spheres.size()));
  }
}

std::vector<Sphere> circles_only(const JobSpec& job) {
  std::vector<Sphere> out;
  for (const auto& s : job.spheres) {
    const auto* sp = std::get_if<Sphere>(&s);
    if (sp == nullptr) throw Error(ErrorKind::InvalidInput, "the Apollonius solver takes circles only");
    out.push_back(*sp);
  }
  return out;
}

// --- verify -------------------------------------------------------------------

struct VerifyCase {
  std::optional<std::vector<GeneralizedSphere>> spheres;
  SymMatrix f;
};

int verify(const Options& o, std::ostream& out) {
  const JobSpec job = load_job(o.input, o.dim);
  const double tol = tolerance(o, job);
  const std::size_t n = job.dimension;

  std::vector<VerifyCase> cases;
  if (job.gram) {
    if (!job.spheres.empty()) throw Error(ErrorKind::InvalidInput, "give either spheres or a gram matrix, not both");
    cases.push_back({std::nullopt, *job.gram});
  } else if (job.spheres.size() == n + 2) {
    cases.push_back({job.spheres, gram(job.spheres).f()});
  } else if (job.spheres.size() == n + 1 && !job.solutions.empty()) {
    for (const auto& sol : job.solutions) {
      std::vector<GeneralizedSphere> all = job.spheres;
      all.push_back(sol);
      SymMatrix f = gram(all).f();
      cases.push_back({std::move(all), std::move(f)});
    }
  } else {
    throw Error(ErrorKind::InvalidInput, "verify needs n+2 spheres, n+1 spheres plus solutions, or a gram matrix");
  }

  bool all_good = true;
  json report = json::array();
  std::string text;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const VerifyCase& vc = cases[c];
    const ConfigurationMatrix cfg(vc.f);
    const Inertia in = cfg.inertia();
    const Realizability verdict = realizable(vc.f, tol * vc.f.max_abs());
    std::optional<double> residual;
    if (vc.spheres && cfg.invertible()) residual = master_residual(*vc.spheres);
    if (verdict != Realizability::Realizable || !cfg.invertible()) all_good = false;

    json rows = json::array();
    text += "configuration " + std::to_string(c + 1) + " of " + std::to_string(cases.size()) + "\n";
    text += "gram:\n";
    for (std::size_t i = 0; i < vc.f.dim(); ++i) {
      json r = json::array();
      text += " ";
      for (std::size_t j = 0; j < vc.f.dim(); ++j) {
        r.push_back(output_number(vc.f(i, j), o.full_precision));
        text += " " + fmt9(vc.f(i, j));
      }
      text += "\n";
      rows.push_back(std::move(r));
    }
    text += "inertia: (" + std::to_string(in.positive) + ", " + std::to_string(in.negative) + ", " +
            std::to_string(in.zero) + ")\n";
    text += std::string("verdict: ") + to_string(verdict) + "\n";
    if (!cfg.invertible()) {
      text += "master residual: singular\n";
    } else if (residual) {
      text += "master residual: " + fmt9(*residual) + "\n";
    }

    json item = {{"gram", rows},
                 {"inertia", {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}}},
                 {"verdict", to_string(verdict)},
                 {"invertible", cfg.invertible()}};
    item["master_residual"] = residual ? json(output_number(*residual, o.full_precision)) : json(nullptr);
    report.push_back(std::move(item));
  }

  if (o.full_precision) {
    emit(out, json{{"configurations", report}});
  } else {
    out << text;
  }
  return all_good ? kSuccess : kDegenerate;
}

// --- solve ----------------------------------------------------------------------

int solve(const Options& o, std::ostream& out) {
  const JobSpec job = load_job(o.input, o.dim);
  if (!job.constraints) throw Error(ErrorKind::InvalidInput, "solve needs a \"constraints\" row");
  require_count(job, job.dimension + 1, "solve");
  const bool full = o.full_precision;

  json doc = {{"dimension", job.dimension}, {"spheres", spheres_json(job.spheres, full)}};
  json row = json::array();
  for (double t : *job.constraints) row.push_back(output_number(t, full));
  doc["constraints"] = row;

  try {
    const SolveResult r =
        complete_configuration(job.spheres, ConstraintRow(*job.constraints), SolveOptions{tolerance(o, job)});
    doc["discriminant"] = output_number(r.discriminant, full);
    doc["solutions"] = solutions_json(r, full);
    doc["coincident"] = spheres_json(r.coincident, full);
    emit(out, doc);
    return r.solutions.empty() ? kNoRealSolution : kSuccess;
  } catch (const NoRealSolutionError& e) {
    doc["discriminant"] = output_number(e.discriminant(), full);
    doc["solutions"] = json::array();
    doc["coincident"] = json::array();
    emit(out, doc);
    return kNoRealSolution;
  }
}

// --- apollonius -------------------------------------------------------------------

std::string signs_label(const Signs& s) {
  std::string label;
  for (int x : s) label += x > 0 ? '+' : '-';
  return label;
}

int apollonius_cmd(const Options& o, const std::string& signs_arg, std::ostream& out) {
  const JobSpec job = load_job(o.input, o.dim);
  if (job.dimension != 2) throw Error(ErrorKind::DimensionMismatch, "apollonius works in the plane");
  require_count(job, 3, "apollonius");
  const std::vector<Sphere> c = circles_only(job);
  const SolveOptions opts{tolerance(o, job)};
  const bool full = o.full_precision;

  if (signs_arg == "all") {
    json cases = json::array();
    std::size_t distinct = 0;
    for (const ApolloniusCase& ac : apollonius_all(c[0], c[1], c[2], opts)) {
      distinct += ac.result.solutions.size();
      cases.push_back({{"signs", signs_label(ac.signs)},
                       {"solvable", ac.solvable},
                       {"solutions", solutions_json(ac.result, full)}});
    }
    emit(out, json{{"cases", cases}, {"distinct", distinct}});
    return distinct > 0 ? kSuccess : kNoRealSolution;
  }

  if (signs_arg.size() != 3 || signs_arg.find_first_not_of("+-") != std::string::npos) {
    throw Error(ErrorKind::InvalidInput, "--signs takes three of '+'/'-' or 'all'");
  }
  const Signs signs{signs_arg[0] == '+' ? 1 : -1, signs_arg[1] == '+' ? 1 : -1, signs_arg[2] == '+' ? 1 : -1};
  const SolveResult r = apollonius(c[0], c[1], c[2], signs, opts);
  emit(out, json{{"signs", signs_arg}, {"solutions", solutions_json(r, full)}});
  return r.solutions.empty() ? kNoRealSolution : kSuccess;
}

// --- descartes / orthocircle --------------------------------------------------

int tangent_triple_cmd(const Options& o, bool orthogonal, std::ostream& out) {
  const JobSpec job = load_job(o.input, o.dim);
  require_count(job, job.dimension + 1, orthogonal ? "orthocircle" : "descartes");
  const SolveOptions opts{tolerance(o, job)};
  const SolveResult r = orthogonal ? orthogonal_circle(job.spheres, opts) : soddy_circles(job.spheres, opts);
  const bool full = o.full_precision;
  emit(out, json{{"curvatures", curvatures_json(r, full)}, {"solutions", solutions_json(r, full)}});
  return r.solutions.empty() ? kNoRealSolution : kSuccess;
}

// --- gasket -------------------------------------------------------------------------

int gasket_cmd(const Options& o, double max_curvature, std::ostream& out) {
  const JobSpec job = load_job(o.input, o.dim);
  require_count(job, 3, "gasket");
  const bool full = o.full_precision;
  json circles = json::array();
  for (const GasketCircle& gc : apollonian_gasket(job.spheres, max_curvature)) {
    json item = sphere_to_json(gc.sphere, full);
    item["parents"] = gc.parents;
    circles.push_back(std::move(item));
  }
  emit(out, json{{"max_curvature", output_number(max_curvature, full)},
                 {"count", circles.size()},
                 {"circles", circles}});
  return kSuccess;
}

// --- render -------------------------------------------------------------------------

int render_cmd(const Options& o, const std::string& output, double width, std::ostream& out) {
  const JobSpec job = load_job(o.input, o.dim);
  std::vector<GeneralizedSphere> solutions = job.solutions;
  if (solutions.empty() && job.constraints) {
    const SolveResult r =
        complete_configuration(job.spheres, ConstraintRow(*job.constraints), SolveOptions{tolerance(o, job)});
    for (const Solution& s : r.solutions) solutions.push_back(s.sphere);
  }
  const std::string svg = render_svg(job.spheres, solutions, width);
  if (output.empty() || output == "-") {
    out << svg;
    return kSuccess;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + output);
  file << svg;
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sphere configurations through their Minkowski-space (Pedoe) vectors", "pedoe"};
  app.require_subcommand(1);

  Options o;
  std::size_t dim = 2;
  app.add_option("--tol", o.tol, "Classification / zero tolerance")->default_val(kDefaultRayTol);
  auto* dim_opt = app.add_option("--dim", dim, "Ambient dimension when the job omits it")->default_val(2);
  app.add_flag("--json", o.full_precision, "Machine output at full double precision");

  auto input = [&](CLI::App* sub) { sub->add_option("input", o.input, "Job file (JSON)")->required(); };

  auto* verify_cmd = app.add_subcommand("verify", "Gram matrix, inertia, realizability and master residual");
  input(verify_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "Complete a configuration from a constraint row");
  input(solve_cmd);

  std::string signs = "all";
  auto* apollonius_sub = app.add_subcommand("apollonius", "Circles tangent to three given circles");
  input(apollonius_sub);
  apollonius_sub->add_option("--signs", signs, "+/- per circle (external/internal) or 'all'");

  auto* descartes_cmd = app.add_subcommand("descartes", "Soddy circles of a mutually tangent triple");
  input(descartes_cmd);
  auto* ortho_cmd = app.add_subcommand("orthocircle", "Circle orthogonal to a mutually tangent triple");
  input(ortho_cmd);

  double max_curvature = 0.0;
  auto* gasket_sub = app.add_subcommand("gasket", "Apollonian packing from a tangent triple");
  input(gasket_sub);
  gasket_sub->add_option("--max-curvature", max_curvature, "Largest curvature to include")->required();

  std::string output;
  double width = 800.0;
  auto* render_sub = app.add_subcommand("render", "Draw spheres and solutions as SVG");
  input(render_sub);
  render_sub->add_option("-o,--output", output, "SVG file ('-' for stdout)");
  render_sub->add_option("--width", width, "Width in pixels")->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  o.tol_given = app.count("--tol") > 0;
  if (!(o.tol > 0.0)) {
    err << "error: --tol must be positive\n";
    return kInputError;
  }
  if (dim_opt->count() > 0) {
    if (dim == 0) {
      err << "error: --dim must be positive\n";
      return kInputError;
    }
    o.dim = dim;
  }

  try {
    if (*verify_cmd) return verify(o, out);
    if (*solve_cmd) return solve(o, out);
    if (*apollonius_sub) return apollonius_cmd(o, signs, out);
    if (*descartes_cmd) return tangent_triple_cmd(o, false, out);
    if (*ortho_cmd) return tangent_triple_cmd(o, true, out);
    if (*gasket_sub) return gasket_cmd(o, max_curvature, out);
    if (*render_sub) return render_cmd(o, output, width, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace pedoe::cli
