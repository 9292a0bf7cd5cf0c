#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "patchkit/fixtures.hpp"
#include "patchkit/ipf.hpp"
#include "patchkit/mesh.hpp"
#include "patchkit/patch_file.hpp"
#include "patchkit/precision.hpp"
#include "patchkit/toric.hpp"

namespace py = pybind11;
using namespace patchkit;

namespace {

/// Accepts int, str ("p/q"), fractions.Fraction or float (taken exactly).
Rational to_rational_py(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) throw py::type_error("booleans are not rationals");
  if (py::isinstance<py::int_>(h) || py::isinstance<py::str>(h)) {
    return parse_rational(py::str(h).cast<std::string>());
  }
  if (py::isinstance<py::float_>(h)) return Rational(h.cast<double>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    return parse_rational(py::str(h.attr("numerator")).cast<std::string>() + "/" +
                          py::str(h.attr("denominator")).cast<std::string>());
  }
  throw py::type_error("expected int, str, Fraction or float");
}

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(to_string(r)));
}

py::list to_fraction_list(const RationalPoint& v) {
  py::list out;
  for (const auto& c : v) out.append(to_fraction(c));
  return out;
}

PointConfig make_config(const py::sequence& points) {
  std::vector<RationalPoint> pts;
  for (const auto& p : points) {
    RationalPoint rp;
    for (const auto& c : p.cast<py::sequence>()) rp.push_back(to_rational_py(c));
    pts.push_back(std::move(rp));
  }
  return PointConfig(std::move(pts));
}

WeightVector make_weights(const py::sequence& weights) {
  std::vector<Rational> ws;
  for (const auto& w : weights) ws.push_back(to_rational_py(w));
  return WeightVector(std::move(ws));
}

py::dict report_dict(const PrecisionReport& r) {
  py::dict d;
  d["samples"] = r.samples_used;
  d["max_err"] = r.max_err;
  d["verdict"] = std::string(to_string(r.verdict));
  d["worst_point"] = r.worst_point;
  return d;
}

}  // namespace

PYBIND11_MODULE(patchkit, m) {
  m.doc() = "Parametric patches over lattice point configurations: toric Bezier bases, "
            "linear precision diagnostics and iterative proportional fitting.";

  static py::exception<Error> error(m, "PatchkitError", PyExc_ValueError);
  static py::exception<NotConvergedError> not_converged(m, "NotConvergedError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotConvergedError& e) {
      py::set_error(not_converged, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<PatchSpec>(m, "PatchSpec")
      .def_property_readonly("dim", &PatchSpec::dim)
      .def_property_readonly("size", &PatchSpec::size)
      .def_property_readonly("points",
                             [](const PatchSpec& s) {
                               py::list out;
                               for (const auto& p : s.config().points()) out.append(to_fraction_list(p));
                               return out;
                             })
      .def_property_readonly("weights",
                             [](const PatchSpec& s) { return to_fraction_list(s.weights().values()); })
      .def_property_readonly("control_points", [](const PatchSpec& s) { return s.control_points(); })
      .def("with_control_points", &PatchSpec::with_control_points, py::arg("controls"))
      .def("to_json", [](const PatchSpec& s) { return write_patch_json(s); })
      .def_static("from_json", &read_patch_json, py::arg("text"))
      .def_static("from_file", &read_patch_file, py::arg("path"))
      .def("__eq__", [](const PatchSpec& a, const PatchSpec& b) { return a == b; });

  m.def("toric_patch",
        [](const py::sequence& points, const py::sequence& weights,
           std::optional<std::vector<Point>> controls) {
          return toric_patch(make_config(points), make_weights(weights), std::move(controls));
        },
        py::arg("points"), py::arg("weights"), py::arg("control_points") = py::none(),
        "Toric Bezier patch of shape (A, w).");

  py::module_ fx = m.def_submodule("fixtures", "Reference patches");
  fx.def("bernstein", &fixtures::bernstein, py::arg("n"));
  fx.def("square", &fixtures::square);
  fx.def("hexagon", &fixtures::hexagon);
  fx.def("pentagon_toric", &fixtures::pentagon_toric);
  fx.def("pentagon_tuned", &fixtures::pentagon_tuned);

  m.def("normalize", [](const std::vector<double>& v) { return normalize(v).coords(); },
        py::arg("values"));
  m.def("basis_values",
        [](const PatchSpec& s, const std::vector<double>& x) { return basis_values(s, x); },
        py::arg("spec"), py::arg("x"));
  m.def("eval_patch", [](const PatchSpec& s, const std::vector<double>& x) { return eval_patch(s, x); },
        py::arg("spec"), py::arg("x"));
  m.def("tautological",
        [](const PatchSpec& s, const std::vector<double>& x) { return tautological(s, x); },
        py::arg("spec"), py::arg("x"));
  m.def("nondegeneracy_rank", &nondegeneracy_rank, py::arg("spec"), py::arg("samples"));

  m.def("facet_system",
        [](const py::sequence& points) {
          py::list out;
          for (const auto& f : facet_system(make_config(points)).forms) {
            out.append(py::make_tuple(to_fraction_list(f.normal()), to_fraction(f.constant())));
          }
          return out;
        },
        py::arg("points"), "Facets as (inward primitive normal, constant) pairs.");
  m.def("monomial_param",
        [](const py::sequence& points, const py::sequence& weights, const std::vector<double>& x) {
          return monomial_param(make_config(points), make_weights(weights), x).coords();
        },
        py::arg("points"), py::arg("weights"), py::arg("x"));
  m.def("is_primitive", [](const py::sequence& points) { return is_primitive(make_config(points)); },
        py::arg("points"));
  m.def("toric_differential",
        [](const py::sequence& points, const py::sequence& weights, const std::vector<double>& x) {
          return toric_differential(laurent_f(make_config(points), make_weights(weights)), x);
        },
        py::arg("points"), py::arg("weights"), py::arg("x"));
  m.def("simploid_config",
        [](const std::vector<std::pair<std::size_t, unsigned>>& blocks) {
          std::vector<SimplexBlock> bs;
          for (const auto& [d, n] : blocks) bs.push_back({d, n});
          auto [config, weights] = simploid_config(bs);
          py::list pts;
          for (const auto& p : config.points()) pts.append(to_fraction_list(p));
          return py::make_tuple(pts, to_fraction_list(weights.values()));
        },
        py::arg("blocks"), "Points and multinomial weights of a Bezier simploid.");

  m.def("lp_blending",
        [](const py::sequence& points, const py::sequence& weights, const std::vector<double>& x,
           double tol, std::size_t max_iter) {
          IpfSettings settings;
          settings.tol = tol;
          settings.max_iter = max_iter;
          IpfResult r = LinearPrecisionSolver(make_config(points), make_weights(weights), settings)
                            .solve(x);
          return py::make_tuple(r.p.coords(), r.iterations, r.residual);
        },
        py::arg("points"), py::arg("weights"), py::arg("x"), py::arg("tol") = 1e-12,
        py::arg("max_iter") = 100000,
        "Linear-precision blending values at x as (p, iterations, residual).");

  m.def("check_linear_precision",
        [](const PatchSpec& s, std::size_t n, double pass_tol, double fail_tol, std::uint64_t seed) {
          return report_dict(check_linear_precision(s, n, pass_tol, fail_tol, seed));
        },
        py::arg("spec"), py::arg("n_samples") = 1000, py::arg("pass_tol") = kDefaultPassTol,
        py::arg("fail_tol") = kDefaultFailTol, py::arg("seed") = 0);
  m.def("rational_lp_1d",
        [](const py::sequence& weights) -> py::tuple {
          RationalLp1d r = rational_lp_1d(make_weights(weights));
          return py::make_tuple(r.has_rational_lp,
                                r.alpha ? to_fraction(*r.alpha) : py::object(py::none()));
        },
        py::arg("weights"));
  m.def("composed_projection",
        [](const py::sequence& points, const py::sequence& weights, const py::sequence& targets,
           const py::sequence& x) {
          RationalPoint xr;
          for (const auto& c : x) xr.push_back(to_rational_py(c));
          return to_fraction_list(composed_projection(make_config(points), make_weights(weights),
                                                      make_config(targets), xr));
        },
        py::arg("points"), py::arg("weights"), py::arg("targets"), py::arg("x"),
        "Exact sum_a w_a x^a (1, t_a) as Fractions.");
  m.def("binomial_relation_residual",
        [](const std::vector<double>& p, const py::sequence& points, const py::sequence& weights) {
          return binomial_relation_residual(p, make_config(points), make_weights(weights));
        },
        py::arg("p"), py::arg("points"), py::arg("weights"));

  m.def("tessellate",
        [](const PatchSpec& s, std::size_t grid_n) {
          Mesh mesh = tessellate(s, grid_n);
          return py::make_tuple(mesh.vertices, mesh.faces);
        },
        py::arg("spec"), py::arg("grid_n"), "(vertices, 0-based faces) of the clipped grid mesh.");
}
