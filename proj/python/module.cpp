#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quotdt/chern.hpp"
#include "quotdt/cli.hpp"
#include "quotdt/error.hpp"
#include "quotdt/toric.hpp"
#include "quotdt/vertex.hpp"

namespace py = pybind11;
using namespace quotdt;

namespace {

py::object to_py(const Integer& x) { return py::int_(py::str(to_string(x))); }

py::object to_py(const Rational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_fraction_string(x));
}

py::list to_py(const Series& s) {
  py::list out;
  for (const auto& c : s.coeffs()) out.append(to_py(c));
  return out;
}

SplitBundle bundle_from(const ToricSpace& space, const std::string& bundle) {
  return split_bundle(space, parse_bundle_list(bundle, space.fan->picard_basis.size()));
}

ColoredPlanePartition point_from(const std::vector<std::vector<std::array<int, 3>>>& colours) {
  ColoredPlanePartition pt;
  for (const auto& boxes : colours) {
    std::vector<Box> b;
    for (const auto& x : boxes) b.push_back(Box{x[0], x[1], x[2]});
    pt.parts.emplace_back(std::move(b));
  }
  return pt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact degree-zero DT invariants of Quot schemes on toric 3-folds";

  static py::exception<Error> error(m, "QuotDTError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("builtin_space_names", &builtin_space_names);
  m.def("macmahon", [](int order) { return to_py(macmahon(order)); }, py::arg("order"));
  m.def("dt_closed_formula",
        [](int r, long c3, int order) { return to_py(dt_closed_formula(r, c3, order)); },
        py::arg("r"), py::arg("c3"), py::arg("order"));
  m.def(
      "dt_series",
      [](const std::string& space, const std::string& bundle, int nmax, std::uint64_t seed,
         int trials) {
        const ToricSpace s = builtin_space(space);
        Series out;
        {
          py::gil_scoped_release release;
          out = dt_series(s, bundle_from(s, bundle), nmax, seed, trials);
        }
        return to_py(out);
      },
      py::arg("space"), py::arg("bundle") = "O", py::arg("nmax") = 2, py::arg("seed") = 1,
      py::arg("trials") = 2);
  m.def(
      "c3_via_localization",
      [](const std::string& space, std::uint64_t seed) {
        return to_py(c3_via_localization(builtin_space(space), seed));
      },
      py::arg("space"), py::arg("seed") = 1);
  m.def(
      "c3_t_omega", [](const std::string& ring) { return to_py(c3_t_omega(named_ring(ring))); },
      py::arg("ring"));
  m.def(
      "count_fixed_points",
      [](const std::string& space, int r, int n) {
        return to_py(count_fixed_points(builtin_space(space), r, n));
      },
      py::arg("space"), py::arg("r"), py::arg("n"));
  m.def(
      "plane_partitions",
      [](int n) {
        std::vector<std::vector<std::array<int, 3>>> out;
        for (const auto& pp : enum_plane_partitions(n)) {
          auto& boxes = out.emplace_back();
          for (const auto& b : pp.boxes()) boxes.push_back({b.i, b.j, b.k});
        }
        return out;
      },
      py::arg("n"));
  m.def(
      "partition_pairs",
      [](int n, int r) {
        std::vector<std::pair<Partition, Partition>> out;
        for (const auto& p : enum_partition_pairs(n, r)) out.emplace_back(p.lambda, p.mu);
        return out;
      },
      py::arg("n"), py::arg("r"));
  m.def(
      "vertex_character",
      [](const std::vector<std::vector<std::array<int, 3>>>& point) {
        const ColoredPlanePartition pt = point_from(point);
        const auto ch = vertex_character(pt, ChartWeights::standard(pt.rank()));
        py::dict out;
        for (const auto& [e, c] : ch.value.terms()) out[py::tuple(py::cast(e))] = to_py(c);
        return out;
      },
      py::arg("point"), "Virtual tangent character on the standard chart; one box list per colour.");
  m.def(
      "euler_inverse",
      [](const std::vector<std::vector<std::array<int, 3>>>& point, const std::vector<long>& s,
         const std::vector<long>& v) {
        const ColoredPlanePartition pt = point_from(point);
        EquivParams params;
        for (long x : s) params.s.emplace_back(x);
        for (long x : v) params.v.emplace_back(x);
        return to_py(euler_inverse(vertex_character(pt, ChartWeights::standard(pt.rank())), params));
      },
      py::arg("point"), py::arg("s"), py::arg("v"));
  m.def(
      "run",
      [](const std::string& config_text) {
        const auto result = cli::run_command(cli::parse_config_text(config_text));
        return py::make_tuple(result.exit_code, result.report.dump());
      },
      py::arg("config"), "Runs a command from key=value config text; returns (exit_code, json).");
}
