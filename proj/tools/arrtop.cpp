#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arrtop/errors.hpp"
#include "arrtop/fixtures.hpp"
#include "arrtop/io.hpp"
#include "arrtop/osalgebra.hpp"
#include "arrtop/report.hpp"

namespace {

using namespace arrtop;

enum ExitCode { kOk = 0, kValidation = 1, kBudget = 2, kConsistency = 3 };

/// A path, or "fixture:NAME" for a built-in fixture.
ArrangementInput load_input(const std::string& spec) {
  const std::string prefix = "fixture:";
  if (spec.rfind(prefix, 0) == 0) return fixtures::by_name(spec.substr(prefix.size()));
  return load_arrangement(spec);
}

std::optional<Chart> parse_chart(const std::vector<std::int64_t>& values) {
  if (values.empty()) return std::nullopt;
  if (values.size() != 9) throw ArgumentError("--chart takes 9 integers (a 3x3 matrix, row-major)");
  Chart c;
  std::copy(values.begin(), values.end(), c.matrix.begin());
  return c;
}

void emit(const Json& data, bool as_json) {
  Report r{data};
  std::cout << (as_json ? r.json_text() : r.text());
}

struct Common {
  std::string file;
  bool json = false;
  std::vector<std::int64_t> chart;
};

void add_common(CLI::App* cmd, Common& c, bool needs_file = true) {
  if (needs_file) cmd->add_option("file", c.file, "Arrangement file (JSON or text) or fixture:NAME")->required();
  cmd->add_flag("--json", c.json, "Emit JSON instead of text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology of complex line arrangements: lattices, resonance, multinets, fundamental groups, "
               "Milnor fibers and boundary manifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "arrtop 0.1.0");

  Common common;
  std::int64_t field = 3;
  int order = 3, depth = 1, max_weight = 3;
  bool nets_only = false, reduced_only = false, simplify = false;
  std::string space = "F";
  std::int64_t budget = 100000;
  std::vector<std::int64_t> klass;

  auto* lattice = app.add_subcommand("lattice", "Intersection lattice, census and collinearity report");
  add_common(lattice, common);

  auto* resonance = app.add_subcommand("resonance", "Aomoto-Betti numbers and resonance membership");
  add_common(resonance, common);
  resonance->add_option("--field,-p", field, "Characteristic: a prime, or 0 for the rationals")->default_val(3);
  resonance->add_option("--depth,-s", depth, "Depth s for the membership test")->default_val(1);
  resonance->add_option("--class", klass, "Integer coordinates of a degree-one class (default: the diagonal)")
      ->delimiter(',');

  auto* multinets = app.add_subcommand("multinets", "Exhaustive multinet search");
  add_common(multinets, common);
  multinets->add_option("--max-weight", max_weight, "Largest multiplicity m_H tried")->default_val(3);
  multinets->add_flag("--nets-only", nets_only, "Only nets");
  multinets->add_flag("--reduced-only", reduced_only, "Only reduced multinets");

  auto* pi1 = app.add_subcommand("pi1", "Braid-monodromy presentation of the fundamental group");
  add_common(pi1, common);
  pi1->add_option("--chart", common.chart, "Chart matrix, 9 comma-separated integers")->delimiter(',');
  pi1->add_flag("--simplify", simplify, "Apply Tietze simplification");

  auto* milnor = app.add_subcommand("milnor", "Monodromy of the Milnor fiber: e_r, Delta(t), H_1(F)");
  add_common(milnor, common);
  milnor->add_option("--chart", common.chart, "Chart matrix, 9 comma-separated integers")->delimiter(',');
  milnor->add_option("--max-weight", max_weight, "Largest multiplicity used for bound claims")->default_val(3);

  auto* boundary = app.add_subcommand("boundary", "Boundary manifold invariants");
  add_common(boundary, common);

  auto* cv = app.add_subcommand("cv-count", "Count torsion characters of given order and depth");
  add_common(cv, common);
  cv->add_option("--order,-r", order, "Character order r")->default_val(3);
  cv->add_option("--depth,-s", depth, "Minimum depth s")->default_val(1);
  cv->add_option("--space", space, "U (complement) or F (Milnor fiber)")
      ->check(CLI::IsMember({"U", "F"}))
      ->default_val("F");
  cv->add_option("--budget", budget, "Largest number of characters examined")->default_val(100000);
  cv->add_option("--chart", common.chart, "Chart matrix, 9 comma-separated integers")->delimiter(',');

  auto* report = app.add_subcommand("report", "Full report");
  add_common(report, common);
  report->add_option("--chart", common.chart, "Chart matrix, 9 comma-separated integers")->delimiter(',');
  report->add_option("--max-weight", max_weight, "Largest multiplicity in the multinet search")->default_val(3);
  report->add_option("--order,-r", order, "Character order for the counts")->default_val(3);
  report->add_option("--budget", budget, "Largest number of characters examined per count")->default_val(1000);

  auto* demo = app.add_subcommand("falk-demo", "Compare the Milnor fibers of the two Falk arrangements");
  add_common(demo, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    ReportOptions opts;
    opts.chart = parse_chart(common.chart);
    opts.multinets.max_weight = max_weight;
    opts.multinets.nets_only = nets_only;
    opts.multinets.reduced_only = reduced_only || nets_only;
    opts.character_order = order;
    opts.character_budget = budget;

    if (demo->parsed()) {
      emit(falk_pair_demo(opts).data, common.json);
      return kOk;
    }
    Pipeline p(load_input(common.file), opts);
    const std::string& label = p.input().label;

    if (lattice->parsed()) {
      Json d = document("lattice", label);
      d["lattice"] = lattice_section(p);
      emit(d, common.json);
    } else if (resonance->parsed()) {
      const FieldSpec fs = field == 0 ? FieldSpec::rationals() : FieldSpec::prime(field);
      const OSTruncation os(p.lattice(), fs);
      const AomotoClass a = klass.empty() ? AomotoClass::diagonal(fs, p.n()) : AomotoClass::from_integers(fs, klass);
      const auto h = aomoto_h1_dim(os, a);
      Json d = document("resonance", label);
      d["field"] = fs.to_string();
      d["class"] = klass.empty() ? Json("diagonal") : Json(klass);
      d["h1_dim"] = h.dim;
      d["trivial_class"] = h.trivial_class;
      d["depth"] = depth;
      d["member"] = resonance_membership(os, a, depth);
      d["dim_A1"] = os.dim1();
      d["dim_A2"] = os.dim2();
      emit(d, common.json);
    } else if (multinets->parsed()) {
      Json d = document("multinets", label);
      d["multinets"] = multinet_section(p);
      emit(d, common.json);
    } else if (pi1->parsed()) {
      Json d = document("pi1", label);
      d["pi1"] = pi1_section(p);
      if (simplify) {
        const auto s = simplify_presentation(p.pi1_u());
        d["simplified"] = {{"generators", s.generator_tags}, {"relators", s.relators}};
      }
      emit(d, common.json);
    } else if (milnor->parsed()) {
      Json d = document("milnor", label);
      d["milnor"] = milnor_section(p);
      emit(d, common.json);
    } else if (boundary->parsed()) {
      Json d = document("boundary", label);
      d["boundary"] = boundary_section(p);
      emit(d, common.json);
    } else if (cv->parsed()) {
      Json d = document("cv-count", label);
      d["characters"] = character_count_section(p, space == "U" ? CharacterSpace::U : CharacterSpace::F, order,
                                                depth, budget);
      emit(d, common.json);
    } else if (report->parsed()) {
      emit(run_full_report(p.input(), opts).data, common.json);
    }
    return kOk;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kConsistency;
  }
}
