#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pedoe/configuration.hpp"
#include "pedoe/error.hpp"
#include "pedoe/gasket.hpp"
#include "pedoe/geometry.hpp"
#include "pedoe/linalg.hpp"
#include "pedoe/minkowski.hpp"
#include "pedoe/solver.hpp"

namespace py = pybind11;
using namespace pedoe;

namespace {

using Rows = std::vector<std::vector<double>>;

// GeneralizedSphere is not default-constructible, so it crosses the boundary
// through these two helpers instead of pybind11's variant caster.
GeneralizedSphere to_shape(py::handle h) {
  if (py::isinstance<Sphere>(h)) return h.cast<Sphere>();
  if (py::isinstance<Hyperplane>(h)) return h.cast<Hyperplane>();
  if (py::isinstance<PointShape>(h)) return h.cast<PointShape>();
  throw py::type_error("expected Sphere, Hyperplane or Point");
}

std::vector<GeneralizedSphere> to_shapes(const py::iterable& items) {
  std::vector<GeneralizedSphere> out;
  for (py::handle h : items) out.push_back(to_shape(h));
  return out;
}

py::object from_shape(const GeneralizedSphere& s) {
  return std::visit([](const auto& x) { return py::cast(x); }, s);
}

std::vector<double> as_list(const MVector& v) { return {v.components().begin(), v.components().end()}; }

py::list from_shapes(const std::vector<GeneralizedSphere>& shapes) {
  py::list out;
  for (const auto& s : shapes) out.append(from_shape(s));
  return out;
}

Rows to_rows(const SymMatrix& m) {
  Rows out(m.dim(), std::vector<double>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  return out;
}

SymMatrix from_rows(const Rows& rows) {
  const std::size_t n = rows.size();
  std::vector<double> entries;
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorKind::InvalidInput, "matrix must be square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return SymMatrix(Matrix(n, n, std::move(entries)));
}

py::dict result_dict(const SolveResult& r) {
  py::list solutions;
  for (const Solution& s : r.solutions) {
    py::dict d;
    d["sphere"] = from_shape(s.sphere);
    d["vector"] = as_list(s.vector);
    d["residual"] = s.residual;
    solutions.append(d);
  }
  py::dict out;
  out["solutions"] = solutions;
  out["coincident"] = from_shapes(r.coincident);
  out["discriminant"] = r.discriminant;
  return out;
}

std::string sphere_repr(const Sphere& s) {
  std::string c;
  for (double x : s.center()) c += (c.empty() ? "" : ", ") + py::repr(py::float_(x)).cast<std::string>();
  return "Sphere([" + c + "], " + py::repr(py::float_(s.radius())).cast<std::string>() + ")";
}

}  // namespace

PYBIND11_MODULE(_pedoe, m) {
  m.doc() = "Circles and spheres as vectors of an isotropic Minkowski space";

  auto base = py::register_exception<Error>(m, "PedoeError", PyExc_ValueError);
  py::register_exception<NoRealSolutionError>(m, "NoRealSolutionError", base.ptr());

  py::class_<Sphere>(m, "Sphere")
      .def(py::init<std::vector<double>, double>(), py::arg("center"), py::arg("radius"))
      .def_property_readonly("center", &Sphere::center)
      .def_property_readonly("radius", &Sphere::radius)
      .def_property_readonly("curvature", &Sphere::curvature)
      .def("flipped", &Sphere::flipped)
      .def("__eq__", [](const Sphere& a, const Sphere& b) { return a == b; })
      .def("__repr__", &sphere_repr);

  py::class_<Hyperplane>(m, "Hyperplane")
      .def(py::init<std::vector<double>, double>(), py::arg("normal"), py::arg("offset"))
      .def_property_readonly("normal", &Hyperplane::normal)
      .def_property_readonly("offset", &Hyperplane::offset)
      .def("flipped", &Hyperplane::flipped)
      .def("__eq__", [](const Hyperplane& a, const Hyperplane& b) { return a == b; });

  py::class_<PointShape>(m, "Point")
      .def(py::init<std::vector<double>>(), py::arg("location"))
      .def_property_readonly("location", &PointShape::location)
      .def("__eq__", [](const PointShape& a, const PointShape& b) { return a == b; });

  m.def("pedoe_vector", [](py::handle s) { return as_list(pedoe_vector(to_shape(s))); }, py::arg("sphere"));
  m.def("pedoe_product", [](py::handle a, py::handle b) { return pedoe_product(to_shape(a), to_shape(b)); }, py::arg("a"), py::arg("b"));
  m.def("sphere_from_vector",
        [](const std::vector<double>& v, double tol) { return from_shape(sphere_from_vector(MVector(v), tol)); }, py::arg("vector"),
        py::arg("tol") = kDefaultRayTol);
  m.def("inner", [](const std::vector<double>& v, const std::vector<double>& w) { return inner(MVector(v), MVector(w)); },
        py::arg("v"), py::arg("w"));
  m.def("metric", [](std::size_t n) { return to_rows(metric(n)); }, py::arg("n"));

  m.def("gram", [](const py::iterable& s) { return to_rows(gram(to_shapes(s)).f()); }, py::arg("spheres"));
  m.def("inertia",
        [](const Rows& rows) {
          const Inertia in = inertia(from_rows(rows));
          return py::make_tuple(in.positive, in.negative, in.zero);
        },
        py::arg("matrix"));
  m.def("realizable", [](const Rows& rows) { return std::string(to_string(realizable(from_rows(rows)))); },
        py::arg("gram"));
  m.def("master_residual", [](const py::iterable& s) { return master_residual(to_shapes(s)); },
        py::arg("spheres"));
  m.def("dual_products", [](const py::iterable& s) { return to_rows(dual_products(to_shapes(s))); },
        py::arg("spheres"));

  m.def("complete_configuration",
        [](const py::iterable& known, const std::vector<double>& row, double tol) {
          return result_dict(complete_configuration(to_shapes(known), ConstraintRow(row), SolveOptions{tol}));
        },
        py::arg("known"), py::arg("targets"), py::arg("tol") = kDefaultRayTol);
  m.def("apollonius",
        [](const Sphere& a, const Sphere& b, const Sphere& c, const Signs& signs) {
          return result_dict(apollonius(a, b, c, signs));
        },
        py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("signs") = Signs{1, 1, 1});
  m.def("apollonius_all",
        [](const Sphere& a, const Sphere& b, const Sphere& c) {
          py::list out;
          for (const ApolloniusCase& ac : apollonius_all(a, b, c)) {
            py::dict d = result_dict(ac.result);
            d["signs"] = ac.signs;
            d["solvable"] = ac.solvable;
            out.append(d);
          }
          return out;
        },
        py::arg("c1"), py::arg("c2"), py::arg("c3"));
  m.def("soddy_circles", [](const py::iterable& s) { return result_dict(soddy_circles(to_shapes(s))); },
        py::arg("tangent"));
  m.def("orthogonal_circle", [](const py::iterable& s) { return result_dict(orthogonal_circle(to_shapes(s))); },
        py::arg("tangent"));
  m.def("curvature_solve",
        [](const Rows& F, const std::vector<double>& known) { return curvature_solve(from_rows(F), known); },
        py::arg("F"), py::arg("known_curvatures"));
  m.def("family_identity_residual",
        [](const std::string& family, const std::vector<double>& b) {
          return family_identity_residual(parse_family(family), b);
        },
        py::arg("family"), py::arg("curvatures"));
  m.def("gasket",
        [](const py::iterable& seeds, double max_curvature) {
          py::list out;
          for (const GasketCircle& c : apollonian_gasket(to_shapes(seeds), max_curvature)) out.append(py::make_tuple(from_shape(c.sphere), c.parents));
          return out;
        },
        py::arg("seeds"), py::arg("max_curvature"));
}
