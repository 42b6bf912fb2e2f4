#include "arrtop/report.hpp"

#include <sstream>

#include "arrtop/boundary.hpp"
#include "arrtop/errors.hpp"
#include "arrtop/fixtures.hpp"
#include "arrtop/jumploci.hpp"
#include "arrtop/milnor.hpp"
#include "arrtop/osalgebra.hpp"

namespace arrtop {

namespace {

Json poly_json(const CharPolyFactorization& d) {
  Json factors = Json::object();
  for (auto [r, e] : d.exponents) factors[std::to_string(r)] = e;
  return Json{{"text", d.to_string()}, {"factors", factors}, {"degree", d.degree()}};
}

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json int_map_json(const std::map<int, int>& m) {
  Json out = Json::object();
  for (auto [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

std::string skipped(const std::string& reason) { return "skipped: " + reason; }

std::string group_string(std::size_t free_rank, const std::vector<Integer>& torsion) {
  std::ostringstream os;
  os << "Z^" << free_rank;
  for (const auto& t : torsion) os << " + Z_" << t.get_str();
  return os.str();
}

}  // namespace

Pipeline::Pipeline(ArrangementInput input, ReportOptions options)
    : input_(std::move(input)), options_(std::move(options)) {}

void Pipeline::require_realized(const std::string& what) const {
  if (!input_.realized()) throw ValidationError(what + " needs a realized arrangement; input is incidence-only");
}

const WiringDiagram& Pipeline::wiring() {
  require_realized("the fundamental group");
  if (!wiring_) wiring_ = choose_chart_and_wire(*input_.arrangement, input_.lattice, options_.chart);
  return *wiring_;
}

const GroupPresentation& Pipeline::pi1_u() {
  if (!pi1_u_) pi1_u_ = braid_presentation(wiring());
  return *pi1_u_;
}

const CosetSchreierData& Pipeline::milnor_fiber() {
  if (!fiber_) fiber_ = milnor_fiber_group(pi1_u());
  return *fiber_;
}

const GroupPresentation& Pipeline::pi1_f() {
  if (!pi1_f_) pi1_f_ = simplify_presentation(milnor_fiber().subgroup);
  return *pi1_f_;
}

const std::map<int, int>& Pipeline::e_values() {
  if (!e_) e_ = all_e_r(pi1_u());
  return *e_;
}

int Pipeline::beta(std::int64_t p) {
  auto it = beta_.find(p);
  if (it == beta_.end()) it = beta_.emplace(p, beta_p(input_.lattice, p)).first;
  return it->second;
}

const std::vector<Multinet>& Pipeline::multinets() {
  if (!multinets_) multinets_ = search_multinets(input_.lattice, options_.multinets);
  return *multinets_;
}

Json document(const std::string& kind, const std::string& label) {
  return Json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"label", label}};
}

Json lattice_section(Pipeline& p) {
  const auto& lat = p.lattice();
  Json census = Json::object();
  for (auto it = lat.census.rbegin(); it != lat.census.rend(); ++it) census[std::to_string(it->first)] = it->second;
  Json flats = Json::array();
  for (const auto& f : lat.flats) {
    Json entry{{"lines", f.lines}};
    if (f.point) entry["point"] = *f.point;
    flats.push_back(entry);
  }
  const auto collinear = collinear_triples_report(lat);
  return Json{{"n", lat.n},
              {"tier", p.input().realized() ? "realized" : "incidence"},
              {"essential", p.input().realized() ? p.input().arrangement->essential() : !lat.is_pencil()},
              {"census", census},
              {"flat_count", lat.flats.size()},
              {"all_double", lat.all_double()},
              {"pencil", lat.is_pencil()},
              {"common_line", {{"exists", collinear.common_line_exists}, {"lines", collinear.common_lines}}},
              {"flats", flats}};
}

Json resonance_section(Pipeline& p) {
  Json betas = Json::object(), forced = Json::object();
  for (auto prime : p.options().primes) {
    const int b = p.beta(prime);
    const bool zero_forced = beta_vanishing_forced(p.lattice(), prime);
    if (zero_forced && b != 0)
      throw ConsistencyError("beta_" + std::to_string(prime) + " = " + std::to_string(b) +
                             " although no flat multiplicity is divisible by " + std::to_string(prime));
    betas[std::to_string(prime)] = b;
    forced[std::to_string(prime)] = zero_forced;
  }
  return Json{{"beta", betas}, {"vanishing_forced", forced}};
}

Json multinet_section(Pipeline& p) {
  const auto& lat = p.lattice();
  const auto& opts = p.options().multinets;
  Json list = Json::array();
  int three_nets = 0;
  Json squares = Json::array();
  for (const auto& m : p.multinets()) {
    const auto verdict = verify_multinet(lat, m);
    if (!verdict.valid) throw ConsistencyError("search returned an invalid multinet: " + verdict.diagnostic);
    const bool net = is_net(m, lat);
    if (m.k() == 3 && net) {
      ++three_nets;
      squares.push_back(latin_square(m, lat));
    }
    list.push_back(Json{{"k", m.k()},
                        {"weight", m.weight},
                        {"classes", m.classes},
                        {"multiplicities", m.mult},
                        {"base_locus_size", m.base_locus.size()},
                        {"reduced", m.reduced()},
                        {"net", net},
                        {"pereira_yuzvinsky", satisfies_pereira_yuzvinsky(m)}});
  }
  Json pointed = Json::array();
  for (const auto& pm : pointed_multinets(lat, p.multinets()))
    pointed.push_back(Json{{"k", pm.multinet.k()}, {"line", pm.line}, {"classes", pm.multinet.classes}});
  return Json{{"search",
               {{"classes", {opts.min_classes, opts.max_classes}},
                {"max_weight", opts.max_weight},
                {"reduced_only", opts.reduced_only},
                {"nets_only", opts.nets_only}}},
              {"count", list.size()},
              {"three_nets", three_nets},
              {"latin_squares", squares},
              {"multinets", list},
              {"pointed", pointed}};
}

Json pi1_section(Pipeline& p) {
  const auto& w = p.wiring();
  const auto& pres = p.pi1_u();
  std::map<int, int> events;
  for (const auto& ev : w.events) ++events[static_cast<int>(ev.wires.size())];
  Json gens = Json::array();
  for (int g = 0; g < pres.num_generators(); ++g)
    gens.push_back(Json{{"tag", pres.generator_tags[static_cast<std::size_t>(g)]},
                        {"line", *pres.meridian_of[static_cast<std::size_t>(g)]}});
  const auto ab = abelianize(pres);
  return Json{{"chart", w.chart.matrix},
              {"events", w.events.size()},
              {"event_multiplicities", int_map_json(events)},
              {"initial_order", w.initial_order},
              {"generators", gens},
              {"relator_encoding", "letter g+1 is generator g, -(g+1) its inverse"},
              {"relators", pres.relators},
              {"relator_count", pres.num_relators()},
              {"abelianization", {{"free_rank", ab.free_rank}, {"torsion", integers_json(ab.torsion)}}}};
}

Json milnor_section(Pipeline& p) {
  const auto& lat = p.lattice();
  const int n = lat.n;
  Json out{{"n", n}};
  const int beta2 = p.beta(2), beta3 = p.beta(3);
  out["beta"] = {{"2", beta2}, {"3", beta3}};

  std::optional<MilnorH1> computed;
  const std::map<int, int>* e = nullptr;
  if (p.input().realized()) {
    e = &p.e_values();
    computed = milnor_h1_decomposition(*e, n);
    const auto& fiber = p.milnor_fiber();
    const auto ab = abelianize(fiber.subgroup);
    if (ab.free_rank != static_cast<std::size_t>(computed->b1_F))
      throw ConsistencyError("b1(F) from the twisted dimensions is " + std::to_string(computed->b1_F) +
                             " but the cover presentation has free rank " + std::to_string(ab.free_rank));
    out["e_r"] = int_map_json(*e);
    out["delta_computed"] = poly_json(computed->delta);
    out["b1_F"] = computed->b1_F;
    out["h1_F_snf"] = {{"free_rank", ab.free_rank},
                       {"torsion", integers_json(ab.torsion)},
                       {"group", group_string(ab.free_rank, ab.torsion)},
                       {"cover_generators", fiber.subgroup.num_generators()},
                       {"cover_relators", fiber.subgroup.num_relators()}};
    Json vanishing = Json::object();
    for (auto [r, value] : *e) {
      const bool forced = !multiplicity_predicates(lat, r).divisible_flat_exists;
      if (forced && value != 0)
        throw ConsistencyError("e_" + std::to_string(r) + " = " + std::to_string(value) +
                               " although no flat multiplicity >= 3 is divisible by " + std::to_string(r));
      vanishing[std::to_string(r)] = forced;
    }
    out["e_r_vanishing_forced"] = vanishing;
  } else {
    const std::string why = skipped("incidence-only input has no fundamental group presentation");
    out["e_r"] = why;
    out["delta_computed"] = why;
    out["b1_F"] = why;
    out["h1_F_snf"] = why;
  }

  try {
    const auto cor = delta_triple_points(lat, beta3);
    out["delta_corollary"] = poly_json(cor);
    if (computed) out["corollary_agrees"] = cor == computed->delta;
  } catch (const ValidationError& err) {
    out["delta_corollary"] = skipped(err.what());
  }
  try {
    const auto conj = delta_conjectural(lat, beta2, beta3);
    Json c = poly_json(conj.formula);
    c["label"] = ConjecturalDelta::kLabel;
    if (computed) c["agrees_with_computed"] = conj.agrees_with(computed->delta);
    out["delta_conjectural"] = c;
  } catch (const ValidationError& err) {
    out["delta_conjectural"] = skipped(err.what());
  }

  if (e) {
    Json bounds = Json::array();
    for (auto d : divisors(n)) {
      if (d < 2 || !is_prime(d)) continue;
      int s = 0;
      for (std::int64_t q = d; n % q == 0; q *= d) {
        ++s;
        const auto mb = modular_bound_check(p.pi1_u(), p.beta(d), d, s);
        if (!mb.holds)
          throw ConsistencyError("modular bound fails: e_" + std::to_string(d) + "^" + std::to_string(s) + " = " +
                                 std::to_string(mb.e) + " > beta = " + std::to_string(mb.beta));
        bounds.push_back(Json{{"p", d}, {"s", s}, {"e", mb.e}, {"beta_p", mb.beta}, {"holds", mb.holds}});
      }
    }
    out["modular_bounds"] = bounds;
  } else {
    out["modular_bounds"] = skipped("needs computed e_r");
  }

  try {
    std::vector<Multinet> reduced;
    for (const auto& m : p.multinets())
      if (m.reduced()) reduced.push_back(m);
    Json claims = Json::array();
    for (const auto& c : multinet_lower_bounds(reduced, n, e)) {
      Json j{{"r", c.r}, {"bound", c.bound}, {"k", c.k}};
      if (c.computed) {
        j["computed"] = *c.computed;
        j["holds"] = *c.holds();
        if (!*c.holds())
          throw ConsistencyError("multinet bound e_" + std::to_string(c.r) + " >= " + std::to_string(c.bound) +
                                 " fails with computed value " + std::to_string(*c.computed));
      } else {
        j["computed"] = skipped("no computed value");
      }
      claims.push_back(j);
    }
    out["bound_claims"] = claims;
    if (const auto b4 = beta4_equalities(lat, p.multinets(), beta2, e)) {
      Json j{{"beta2", b4->beta2}};
      if (const auto h = b4->holds()) {
        j["e2"] = *b4->e2;
        j["e4"] = *b4->e4;
        j["holds"] = *h;
      } else {
        j["check"] = skipped("no computed e_2, e_4");
      }
      out["beta4_claim"] = j;
    } else {
      out["beta4_claim"] = nullptr;
    }
  } catch (const BudgetError& err) {
    out["bound_claims"] = skipped(err.what());
    out["beta4_claim"] = skipped(err.what());
  }
  return out;
}

Json boundary_section(Pipeline& p) {
  const auto& lat = p.lattice();
  const auto g = build_graph(lat);
  Json out{{"graph", {{"V", g.vertex_count()}, {"E", g.edge_count()}, {"components", g.components}, {"b1", g.b1()}}}};
  try {
    out["b1_boundary_U"] = b1_boundary_U(g);
  } catch (const ValidationError& err) {
    out["b1_boundary_U"] = skipped(err.what());
  }
  const auto delta = delta_boundary_F(lat);
  out["delta_boundary_F"] = poly_json(delta);
  out["b1_boundary_F"] = delta.degree();
  out["h1_boundary_F_torsion"] = kBoundaryTorsionNote;
  const auto cls = boundary_cover_classifier(g);
  Json cycles = Json::array();
  for (const auto& c : cls.cycles) cycles.push_back(Json{{"line", c.line}, {"flat", c.flat}, {"value", 0}});
  out["cover_classifier"] = {{"modulus", cls.n}, {"meridians", cls.meridian_values}, {"cycles", cycles}};
  return out;
}

Json character_count_section(Pipeline& p, CharacterSpace space, int order, int depth, std::int64_t budget) {
  const auto& pres = space == CharacterSpace::U ? p.pi1_u() : p.pi1_f();
  const auto c = count_torsion_points(pres, order, depth, budget);
  return Json{{"space", space == CharacterSpace::U ? "U" : "F"},
              {"order", c.order},
              {"depth", c.depth},
              {"count", c.count},
              {"examined", c.examined},
              {"b1", c.b1},
              {"torsion", integers_json(c.torsion)},
              {"trivial_included", c.trivial_included}};
}

std::string Report::json_text() const { return data.dump(2) + "\n"; }

namespace {

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const bool nested = v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object()));
    os << pad << (j.is_object() ? it.key() : "-");
    if (nested) {
      os << ":\n";
      render(v, indent + 2, os);
    } else {
      os << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

}  // namespace

std::string Report::text() const {
  std::ostringstream os;
  render(data, 0, os);
  return os.str();
}

Report run_full_report(const ArrangementInput& input, const ReportOptions& options) {
  Pipeline p(input, options);
  Report r{document("report", input.label)};
  r.data["lattice"] = lattice_section(p);
  r.data["resonance"] = resonance_section(p);
  try {
    r.data["multinets"] = multinet_section(p);
  } catch (const BudgetError& err) {
    r.data["multinets"] = skipped(err.what());
  }
  if (input.realized()) {
    Json pi1 = pi1_section(p);
    pi1.erase("relators");
    r.data["pi1"] = pi1;
  } else {
    r.data["pi1"] = skipped("incidence-only input has no realization");
  }
  r.data["milnor"] = milnor_section(p);
  r.data["boundary"] = boundary_section(p);
  if (input.realized()) {
    Json counts = Json::array();
    for (int depth : options.character_depths) {
      try {
        counts.push_back(character_count_section(p, CharacterSpace::F, options.character_order, depth,
                                                 options.character_budget));
      } catch (const BudgetError& err) {
        counts.push_back(skipped(err.what()));
      }
    }
    r.data["characters"] = counts;
  } else {
    r.data["characters"] = skipped("incidence-only input has no fundamental group presentation");
  }
  r.data["provenance"] = {
      {"beta", "rank of multiplication by the diagonal class over F_p"},
      {"e_r", "twisted H_1 at rho_r by Fox calculus over Q(zeta_r)"},
      {"h1_F_snf", "Smith form of the Reidemeister-Schreier presentation of the Milnor fiber group"},
      {"delta_corollary", "triple-point formula from beta_3"},
      {"delta_conjectural", "conjectural formula from beta_2 and beta_3"},
      {"b1_boundary_U", "(n - 1) + b_1 of the incidence graph, from the boundary-manifold literature"},
      {"delta_boundary_F", "product over flats of (t-1)(t^gcd(m,n)-1)^(m-2)"},
      {"characters", "exhaustive twisted H_1 over the r-torsion characters of H_1(F)"}};
  return r;
}

Report run_full_report(const std::string& path, const ReportOptions& options) {
  return run_full_report(load_arrangement(path), options);
}

Report falk_pair_demo(const ReportOptions& options) {
  ReportOptions opts = options;
  opts.character_budget = std::max<std::int64_t>(opts.character_budget, 243);
  Pipeline a(ArrangementInput::from_arrangement(fixtures::falk_A()), opts);
  Pipeline b(ArrangementInput::from_arrangement(fixtures::falk_A_prime()), opts);
  Report r{document("falk-demo", "falk_A vs falk_A_prime")};

  auto pair = [](const Json& x, const Json& y) { return Json{{"A", x}, {"A_prime", y}, {"equal", x == y}}; };
  const Json la = lattice_section(a), lb = lattice_section(b);
  const Json ma = milnor_section(a), mb = milnor_section(b);
  const Json ba = boundary_section(a), bb = boundary_section(b);
  r.data["matching"] = {{"census", pair(la["census"], lb["census"])},
                        {"beta", pair(ma["beta"], mb["beta"])},
                        {"delta", pair(ma["delta_computed"]["text"], mb["delta_computed"]["text"])},
                        {"delta_boundary_F", pair(ba["delta_boundary_F"]["text"], bb["delta_boundary_F"]["text"])},
                        {"b1_F", pair(ma["b1_F"], mb["b1_F"])},
                        {"h1_F", pair(ma["h1_F_snf"]["group"], mb["h1_F_snf"]["group"])},
                        {"b1_boundary_U", pair(ba["b1_boundary_U"], bb["b1_boundary_U"])}};
  r.data["distinguishing_lattice_property"] = pair(la["common_line"]["exists"], lb["common_line"]["exists"]);

  const auto count = [&](Pipeline& p, int depth) {
    return character_count_section(p, CharacterSpace::F, 3, depth, opts.character_budget)["count"];
  };
  const Json d2 = pair(count(a, 2), count(b, 2));
  const Json d1 = pair(count(a, 1), count(b, 1));
  r.data["separating"] = {{"order3_depth2_counts", d2}, {"order3_depth1_counts", d1}};
  const bool separated = !d2["equal"].get<bool>() || !d1["equal"].get<bool>();
  r.data["conclusion"] = separated
                             ? "pi_1(F) and pi_1(F') are not isomorphic, so the two Milnor fibers are not homotopy "
                               "equivalent, although their homology and monodromy data agree"
                             : "the computed invariants do not separate the two Milnor fibers";
  return r;
}

}  // namespace arrtop
