#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spanlines/cli.hpp"
#include "spanlines/constructions.hpp"
#include "spanlines/inequalities.hpp"
#include "spanlines/io.hpp"
#include "spanlines/render.hpp"
#include "spanlines/search.hpp"

namespace py = pybind11;
using namespace spanlines;

namespace {

// Coordinates of a point as exact strings: one string per rational
// coordinate, or a coefficient list for extension fields.
py::list point_to_python(const ProjectivePoint& p) {
  py::list out;
  for (const auto& c : p.coords()) {
    if (p.field().kind() == FieldKind::rational) {
      out.append(c.rational_part().get_str());
    } else {
      py::list coeffs;
      for (const auto& q : c.coeffs()) coeffs.append(q.get_str());
      out.append(coeffs);
    }
  }
  return out;
}

Configuration rational_configuration(const std::vector<std::vector<py::object>>& points, const std::string& label) {
  std::vector<ProjectivePoint> out;
  for (const auto& p : points) {
    if (p.size() != 2 && p.size() != 3) throw std::invalid_argument("points need 2 (affine) or 3 (homogeneous) coordinates");
    std::vector<Rational> c;
    for (const auto& x : p) c.push_back(parse_rational(py::str(x)));
    if (c.size() == 2) c.push_back(1);
    out.push_back(ProjectivePoint::rational(c[0], c[1], c[2]));
  }
  return Configuration(FieldDescriptor::rational(), std::move(out), label);
}

py::dict ell_to_python(const std::map<std::size_t, std::uint64_t>& ell) {
  py::dict out;
  for (const auto& [i, count] : ell) out[py::int_(i)] = count;
  return out;
}

}  // namespace

PYBIND11_MODULE(_spanlines, m) {
  m.doc() = "Spanned-line spectra of planar point configurations in exact arithmetic";

  py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<RenderError>(m, "RenderError", PyExc_ValueError);

  py::class_<Configuration>(m, "Configuration")
      .def_property_readonly("label", &Configuration::label)
      .def_property_readonly("field", [](const Configuration& c) { return c.field().to_string(); })
      .def_property_readonly("is_real", &Configuration::is_real)
      .def("__len__", &Configuration::size)
      .def_property_readonly("points",
                             [](const Configuration& c) {
                               py::list out;
                               for (const auto& p : c.points()) out.append(point_to_python(p));
                               return out;
                             })
      .def("to_json", [](const Configuration& c) { return configuration_to_json(c).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    try {
                      return configuration_from_json(nlohmann::json::parse(text));
                    } catch (const nlohmann::json::exception& e) {
                      throw FormatError(e.what());
                    }
                  })
      .def("__eq__", [](const Configuration& a, const Configuration& b) { return a == b; })
      .def("__repr__", [](const Configuration& c) {
        return "<Configuration " + c.label() + ": " + std::to_string(c.size()) + " points over " +
               c.field().to_string() + ">";
      });

  py::class_<LineSpectrum>(m, "LineSpectrum")
      .def_readonly("n", &LineSpectrum::n)
      .def_property_readonly("ell", [](const LineSpectrum& s) { return ell_to_python(s.ell); })
      .def_readonly("total_lines", &LineSpectrum::total_lines)
      .def_readonly("incidences", &LineSpectrum::incidences)
      .def_readonly("max_collinear", &LineSpectrum::max_collinear)
      .def_readonly("degrees", &LineSpectrum::degrees)
      .def_property_readonly("max_degree", &LineSpectrum::max_degree)
      .def("__eq__", [](const LineSpectrum& a, const LineSpectrum& b) { return a == b; })
      .def("__repr__", [](const LineSpectrum& s) {
        std::ostringstream out;
        out << "<LineSpectrum n=" << s.n << " lines=" << s.total_lines << " incidences=" << s.incidences << ">";
        return out.str();
      });

  py::class_<InequalityReport>(m, "InequalityReport")
      .def_readonly("name", &InequalityReport::name)
      .def_property_readonly("kind", [](const InequalityReport& r) { return to_string(r.kind); })
      .def_property_readonly("relation", [](const InequalityReport& r) { return to_string(r.relation); })
      .def_readonly("applicable", &InequalityReport::applicable)
      .def_readonly("applicability_reason", &InequalityReport::applicability_reason)
      .def_property_readonly("lhs", [](const InequalityReport& r) { return r.lhs.get_str(); })
      .def_property_readonly("rhs", [](const InequalityReport& r) { return r.rhs.get_str(); })
      .def_property_readonly("slack", [](const InequalityReport& r) { return r.slack.get_str(); })
      .def_readonly("satisfied", &InequalityReport::satisfied)
      .def_readonly("tight", &InequalityReport::tight)
      .def_property_readonly("is_failure", &InequalityReport::is_failure)
      .def("__repr__", [](const InequalityReport& r) {
        return "<InequalityReport " + r.name + " satisfied=" + (r.satisfied ? "True" : "False") +
               " slack=" + r.slack.get_str() + ">";
      });

  m.def(
      "generate",
      [](const std::string& name, int m_, int k, int n, int a, int b, std::uint64_t seed, std::int64_t bound) {
        ConstructionSpec spec;
        spec.name = parse_construction_name(name);
        spec.m = m_;
        spec.k = k;
        spec.n = n;
        spec.a = a;
        spec.b = b;
        spec.seed = seed;
        spec.bound = bound;
        return generate(spec);
      },
      py::arg("name"), py::arg("m") = 3, py::arg("k") = 2, py::arg("n") = 3, py::arg("a") = 2, py::arg("b") = 2,
      py::arg("seed") = 0, py::arg("bound") = 0, "Build a named configuration.");
  m.def("rational_configuration", &rational_configuration, py::arg("points"), py::arg("label") = "",
        "Configuration over Q from affine (x, y) or homogeneous (x, y, z) coordinates (ints or 'p/q' strings).");
  m.def("read_configuration", &read_configuration, py::arg("path"));
  m.def("write_configuration", &write_configuration, py::arg("config"), py::arg("path"));

  m.def(
      "spectrum", [](const Configuration& c, unsigned threads) { return spectrum(c, {threads}); }, py::arg("config"),
      py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "spanned_lines",
      [](const Configuration& c, unsigned threads) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& line : spanned_lines(c, {threads})) out.push_back(line.members);
        return out;
      },
      py::arg("config"), py::arg("threads") = 1, "Member indices of every spanned line, in canonical order.");
  m.def(
      "oracle_spanned_lines",
      [](const Configuration& c) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& line : oracle_spanned_lines(c)) out.push_back(line.members);
        return out;
      },
      py::arg("config"));

  m.def("check_names", &check_names);
  m.def("run_checks", &run_checks, py::arg("spectrum"), py::arg("real"), py::arg("which") = "all");
  m.def("any_failure", &any_failure, py::arg("reports"));

  m.def(
      "render_svg", [](const Configuration& c) { return render_svg(c, spanned_lines(c)); }, py::arg("config"));

  m.def(
      "exhaustive_search",
      [](std::size_t n, int grid_side, std::size_t cap, const std::string& objective, bool symmetry_pruning) {
        ExhaustiveOptions o;
        o.n = n;
        o.grid_side = grid_side;
        o.cap = cap;
        o.objective = parse_objective(objective);
        o.symmetry_pruning = symmetry_pruning;
        return search_record_to_json(exhaustive_search(o)).dump();
      },
      py::arg("n") = 6, py::arg("grid_side") = 4, py::arg("cap") = 3, py::arg("objective") = "incidences",
      py::arg("symmetry_pruning") = true, "Search record as a JSON string.");
  m.def(
      "local_search",
      [](std::size_t n, std::int64_t bound, std::size_t cap, std::uint64_t iterations, std::uint64_t restarts,
         std::uint64_t seed, const std::string& objective, unsigned threads, const std::string& checkpoint,
         std::uint64_t checkpoint_every, std::uint64_t stop_after) {
        LocalSearchOptions o;
        o.n = n;
        o.bound = bound;
        o.cap = cap;
        o.iterations = iterations;
        o.restarts = restarts;
        o.seed = seed;
        o.objective = parse_objective(objective);
        o.threads = threads;
        o.checkpoint_path = checkpoint;
        o.checkpoint_every = checkpoint_every;
        o.stop_after = stop_after;
        return search_record_to_json(local_search(o)).dump();
      },
      py::arg("n") = 12, py::arg("bound") = 0, py::arg("cap") = 6, py::arg("iterations") = 2000,
      py::arg("restarts") = 4, py::arg("seed") = 0, py::arg("objective") = "incidences", py::arg("threads") = 1,
      py::arg("checkpoint") = "", py::arg("checkpoint_every") = 500, py::arg("stop_after") = 0,
      "Search record as a JSON string.");

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
