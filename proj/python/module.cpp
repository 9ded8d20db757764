#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brillouin/config.hpp"
#include "brillouin/counting.hpp"
#include "brillouin/errors.hpp"
#include "brillouin/mediatrix.hpp"
#include "brillouin/pointset.hpp"
#include "brillouin/render.hpp"
#include "brillouin/verify.hpp"
#include "brillouin/zones.hpp"

namespace py = pybind11;
using namespace brillouin;

namespace {

Point2 as_point(std::pair<double, double> p) { return {p.first, p.second}; }
std::pair<double, double> as_pair(Point2 p) { return {p.x, p.y}; }

Window as_window(std::tuple<double, double, double, double> w) {
  return {std::get<0>(w), std::get<1>(w), std::get<2>(w), std::get<3>(w)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Brillouin zones of discrete point sets in metric planes";

  py::register_exception<horizon_error>(m, "HorizonError");
  py::register_exception<window_too_small_error>(m, "WindowTooSmallError");

  py::class_<Metric>(m, "Metric")
      .def_static("lk", &Metric::lk, py::arg("exponent"))
      .def_static("manhattan", &Metric::manhattan)
      .def_static("euclidean", &Metric::euclidean)
      .def_static("hyperbolic", &Metric::hyperbolic)
      .def_property_readonly("exponent", &Metric::exponent)
      .def("__eq__", [](const Metric& a, const Metric& b) { return a == b; })
      .def("__repr__", [](const Metric& mt) {
        if (mt.kind() == MetricKind::hyperbolic_disk)
          return std::string("Metric.hyperbolic()");
        return "Metric.lk(" + std::to_string(mt.exponent()) + ")";
      });

  py::class_<PointSet>(m, "PointSet")
      .def_static("square_lattice", &PointSet::square_lattice)
      .def_static("irrational_lattice",
                  static_cast<PointSet (*)(double)>(&PointSet::irrational_lattice),
                  py::arg("alpha"))
      .def_static("irrational_lattice",
                  static_cast<PointSet (*)()>(&PointSet::irrational_lattice))
      .def_static("cross_set", &PointSet::cross_set)
      .def_static("gamma_orbit", &PointSet::gamma_orbit, py::arg("k"),
                  py::arg("n_max"))
      .def_property_readonly("alpha", &PointSet::alpha)
      .def("orbit_horizon", &PointSet::orbit_horizon);

  m.def(
      "distance",
      [](const Metric& metric, std::pair<double, double> a,
         std::pair<double, double> b) {
        return distance(metric, as_point(a), as_point(b));
      },
      py::arg("metric"), py::arg("a"), py::arg("b"));

  m.def(
      "enumerate_in_ball",
      [](const PointSet& set, const Metric& metric,
         std::pair<double, double> center, double radius) {
        std::vector<std::pair<double, double>> out;
        for (Point2 p : enumerate_in_ball(set, metric, as_point(center), radius))
          out.push_back(as_pair(p));
        return out;
      },
      py::arg("set"), py::arg("metric"), py::arg("center"), py::arg("radius"));

  m.def(
      "nearest_sorted",
      [](const PointSet& set, const Metric& metric,
         std::pair<double, double> query, std::size_t count) {
        std::vector<std::pair<std::pair<double, double>, double>> out;
        for (const Neighbor& nb : nearest_sorted(set, metric, as_point(query), count))
          out.push_back({as_pair(nb.point), nb.dist});
        return out;
      },
      py::arg("set"), py::arg("metric"), py::arg("query"), py::arg("count"));

  m.def(
      "classify",
      [](const Metric& metric, const PointSet& set,
         std::pair<double, double> basepoint, std::pair<double, double> x,
         double tol) {
        ZoneClassification c =
            classify(metric, set, as_point(basepoint), as_point(x), tol);
        return py::make_tuple(c.m, c.ell, c.zone_index(), c.on_boundary());
      },
      py::arg("metric"), py::arg("set"), py::arg("basepoint"), py::arg("x"),
      py::arg("tol") = kDefaultTol,
      "Returns (inside_count, circle_count, zone_index, on_boundary)");

  py::class_<ZoneRaster>(m, "ZoneRaster")
      .def_readonly("width", &ZoneRaster::width)
      .def_readonly("height", &ZoneRaster::height)
      .def_readonly("zone_index", &ZoneRaster::zone_index)
      .def_readonly("boundary", &ZoneRaster::boundary)
      .def("at", &ZoneRaster::at, py::arg("i"), py::arg("j"))
      .def("boundary_at", &ZoneRaster::boundary_at, py::arg("i"), py::arg("j"));

  m.def(
      "raster",
      [](const Metric& metric, const PointSet& set,
         std::pair<double, double> basepoint,
         std::tuple<double, double, double, double> window, std::size_t width,
         std::size_t height, double tol, bool allow_horizon_clip) {
        return raster(metric, set, as_point(basepoint), as_window(window), width,
                      height, tol, allow_horizon_clip);
      },
      py::arg("metric"), py::arg("set"), py::arg("basepoint"), py::arg("window"),
      py::arg("width"), py::arg("height"), py::arg("tol") = kDefaultTol,
      py::arg("allow_horizon_clip") = false);

  m.def(
      "area_estimate",
      [](const Metric& metric, const PointSet& set,
         std::pair<double, double> basepoint, std::size_t n,
         std::tuple<double, double, double, double> window, std::size_t samples,
         std::uint64_t seed) {
        AreaEstimate est = area_estimate(metric, set, as_point(basepoint), n,
                                         as_window(window), samples, seed);
        return py::make_tuple(est.area, est.std_error);
      },
      py::arg("metric"), py::arg("set"), py::arg("basepoint"), py::arg("n"),
      py::arg("window"), py::arg("samples"), py::arg("seed"));

  m.def(
      "to_ppm",
      [](const ZoneRaster& zr, std::uint64_t palette_seed, std::uint32_t max_zone) {
        return py::bytes(to_ppm(zr, palette_seed, max_zone));
      },
      py::arg("raster"), py::arg("palette_seed") = 0, py::arg("max_zone") = 0);

  m.def(
      "to_svg",
      [](const ZoneRaster& zr, std::uint64_t palette_seed, std::uint32_t max_zone) {
        return to_svg(zr, palette_seed, max_zone);
      },
      py::arg("raster"), py::arg("palette_seed") = 0, py::arg("max_zone") = 0);

  m.def("r2_formula", &r2_formula, py::arg("n"));
  m.def("r2_bruteforce", &r2_bruteforce, py::arg("n"));
  m.def(
      "torus_focusing",
      [](std::int64_t num, std::int64_t den) {
        return torus_focusing({num, den});
      },
      py::arg("num"), py::arg("den") = 1,
      "Focusing count at squared length num/den");
  m.def("gamma_focusing_formula", &gamma_focusing_formula, py::arg("k"),
        py::arg("n"));
  m.def("gamma_focusing_bruteforce", &gamma_focusing_bruteforce, py::arg("k"),
        py::arg("n"));
  m.def("gamma_focusing_bound", &gamma_focusing_bound, py::arg("k"), py::arg("n"));
  m.def(
      "lk_circle_coincidences",
      [](std::int64_t k_exp, std::int64_t bound) {
        std::vector<py::tuple> out;
        for (const Coincidence& c : lk_circle_coincidences(k_exp, bound)) {
          std::vector<std::pair<std::int64_t, std::int64_t>> reps;
          for (const PowerPair& pp : c.representations)
            reps.push_back({pp.a, pp.b});
          out.push_back(py::make_tuple(c.value, reps));
        }
        return out;
      },
      py::arg("k_exp"), py::arg("bound"));

  m.def(
      "solve_quadruples",
      [](std::int64_t n, std::int64_t k) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t,
                               std::int64_t>>
            out;
        for (const Quadruple& g : solve_quadruples(n, k))
          out.push_back({g.p, g.q, g.r, g.s});
        return out;
      },
      py::arg("n"), py::arg("k"));

  m.def(
      "trace_level_set",
      [](const Metric& metric, std::pair<double, double> a,
         std::tuple<double, double, double, double> window, double step_size,
         double tol) {
        TraceOptions opt;
        opt.step_size = step_size;
        opt.tol = tol;
        Polyline poly = trace_level_set(metric, as_point(a), as_window(window), opt);
        std::vector<std::tuple<double, double, double>> out;
        for (std::size_t i = 0; i < poly.points.size(); ++i)
          out.push_back({poly.points[i].x, poly.points[i].y, poly.residuals[i]});
        return out;
      },
      py::arg("metric"), py::arg("a"), py::arg("window"),
      py::arg("step_size") = 0.0, py::arg("tol") = 1e-9,
      "Rows of (x, y, residual)");

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("check_name", &VerificationReport::check_name)
      .def_readonly("passed", &VerificationReport::passed)
      .def_readonly("statistic", &VerificationReport::statistic)
      .def_readonly("threshold", &VerificationReport::threshold)
      .def_readonly("samples", &VerificationReport::samples)
      .def_readonly("details", &VerificationReport::details)
      .def("to_json", &VerificationReport::to_json, py::arg("indent") = 2);

  m.def(
      "check_tiling",
      [](const Metric& metric, const PointSet& set, std::size_t n,
         std::tuple<double, double, double, double> region, std::size_t samples,
         std::uint64_t seed) {
        return check_tiling(metric, set, n, as_window(region), samples, seed);
      },
      py::arg("metric"), py::arg("set"), py::arg("n"), py::arg("region"),
      py::arg("samples"), py::arg("seed"));

  m.def(
      "check_equal_area",
      [](const Metric& metric, const PointSet& set,
         std::pair<double, double> basepoint, const std::vector<std::size_t>& ns,
         std::size_t samples, std::uint64_t seed) {
        return check_equal_area(metric, set, as_point(basepoint), ns, samples,
                                seed);
      },
      py::arg("metric"), py::arg("set"), py::arg("basepoint"), py::arg("n_list"),
      py::arg("samples"), py::arg("seed"));

  m.def("emit_config", [](const std::string& json_text) {
    return emit_config(parse_config(json_text));
  });
}
