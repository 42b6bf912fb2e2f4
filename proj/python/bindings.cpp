#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arrtop/errors.hpp"
#include "arrtop/fixtures.hpp"
#include "arrtop/io.hpp"
#include "arrtop/jumploci.hpp"
#include "arrtop/report.hpp"

namespace py = pybind11;
using namespace arrtop;

namespace {

std::map<int, int> census(Pipeline& p) { return p.lattice().census; }

std::string delta_text(Pipeline& p) { return milnor_h1_decomposition(p.e_values(), p.n()).delta.to_string(); }

int b1_F(Pipeline& p) { return milnor_h1_decomposition(p.e_values(), p.n()).b1_F; }

py::dict h1_F(Pipeline& p) {
  const auto ab = abelianize(p.milnor_fiber().subgroup);
  std::vector<std::string> torsion;
  for (const auto& t : ab.torsion) torsion.push_back(t.get_str());
  py::dict d;
  d["free_rank"] = ab.free_rank;
  d["torsion"] = torsion;
  return d;
}

std::int64_t count_characters(Pipeline& p, int order, int depth, const std::string& space, std::int64_t budget) {
  if (space != "U" && space != "F") throw ArgumentError("space must be 'U' or 'F'");
  const auto& pres = space == "U" ? p.pi1_u() : p.pi1_f();
  return count_torsion_points(pres, order, depth, budget).count;
}

}  // namespace

PYBIND11_MODULE(_arrtop, m) {
  m.doc() = "Exact topology of complex line arrangements";

  auto base = py::register_exception<Error>(m, "ArrtopError");
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  m.def("fixture_names", &fixtures::names, "Names of the built-in fixtures");
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  py::class_<Pipeline>(m, "Arrangement")
      .def_static(
          "fixture", [](const std::string& name) { return Pipeline(fixtures::by_name(name)); }, py::arg("name"))
      .def_static(
          "load", [](const std::string& path) { return Pipeline(load_arrangement(path)); }, py::arg("path"))
      .def_static(
          "parse", [](const std::string& text) { return Pipeline(parse_arrangement(text)); }, py::arg("text"))
      .def_static(
          "from_lines",
          [](const std::vector<std::array<std::int64_t, 3>>& lines, const std::string& label) {
            std::vector<ProjLine> ls;
            for (const auto& l : lines) ls.push_back(ProjLine::make(l[0], l[1], l[2]));
            return Pipeline(ArrangementInput::from_arrangement(Arrangement(label, std::move(ls))));
          },
          py::arg("lines"), py::arg("label") = "arrangement")
      .def_property_readonly("label", [](Pipeline& p) { return p.input().label; })
      .def_property_readonly("n", &Pipeline::n)
      .def_property_readonly("realized", [](Pipeline& p) { return p.input().realized(); })
      .def("census", &census, "Multiplicity -> number of flats")
      .def("beta", &Pipeline::beta, py::arg("p"), "Aomoto-Betti number over F_p")
      .def("e_r", [](Pipeline& p) { return p.e_values(); }, "e_r for every divisor 1 < r | n")
      .def("delta", &delta_text, "Characteristic polynomial of the monodromy on H_1(F)")
      .def("b1_F", &b1_F)
      .def("h1_F", &h1_F, "Smith form of H_1(F, Z) from the cyclic cover presentation")
      .def("count_characters", &count_characters, py::arg("order"), py::arg("depth"), py::arg("space") = "F",
           py::arg("budget") = 100000)
      .def("report_json", [](Pipeline& p) { return run_full_report(p.input(), p.options()).json_text(); })
      .def("section_json", [](Pipeline& p, const std::string& name) {
        Json j;
        if (name == "lattice") j = lattice_section(p);
        else if (name == "resonance") j = resonance_section(p);
        else if (name == "multinets") j = multinet_section(p);
        else if (name == "pi1") j = pi1_section(p);
        else if (name == "milnor") j = milnor_section(p);
        else if (name == "boundary") j = boundary_section(p);
        else throw ArgumentError("unknown section '" + name + "'");
        return j.dump();
      }, py::arg("name"));

  m.def("falk_demo_json", [] { return falk_pair_demo().json_text(); });
}
