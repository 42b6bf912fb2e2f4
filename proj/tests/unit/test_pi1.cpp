#include <doctest.h>

#include "arrtop/errors.hpp"
#include "arrtop/fixtures.hpp"
#include "arrtop/jumploci.hpp"
#include "arrtop/pi1.hpp"

using namespace arrtop;

namespace {

/// Charts from a small grid that the wiring step accepts.
std::vector<Chart> usable_charts(const Arrangement& arr, const IntersectionLattice& lat, std::size_t want) {
  std::vector<Chart> out;
  for (int a = -3; a <= 3 && out.size() < want; ++a)
    for (int b = -3; b <= 3 && out.size() < want; ++b)
      for (int c = -3; c <= 3 && out.size() < want; ++c) {
        Chart ch{{1, a, 0, 0, 1, 0, b, c, 1}};
        try {
          choose_chart_and_wire(arr, lat, ch);
          out.push_back(ch);
        } catch (const ValidationError&) {
        }
      }
  return out;
}

}  // namespace

TEST_CASE("wiring diagrams are well formed") {
  for (const auto& name : fixtures::names()) {
    const auto in = fixtures::by_name(name);
    if (!in.realized()) continue;
    CAPTURE(name);
    const auto w = choose_chart_and_wire(*in.arrangement, in.lattice);
    CHECK(w.num_wires() == in.size());
    CHECK(w.events.size() == in.lattice.flats.size());
    for (std::size_t i = 0; i + 1 < w.events.size(); ++i) CHECK(w.events[i].x < w.events[i + 1].x);
    int expected = 0;
    for (const auto& f : in.lattice.flats) expected += f.multiplicity() - 1;
    CHECK(event_relator_count(w) == expected);
  }
}

TEST_CASE("presentations abelianize to Z^{n-1}") {
  for (const auto& name : fixtures::names()) {
    const auto in = fixtures::by_name(name);
    if (!in.realized()) continue;
    CAPTURE(name);
    const auto p = braid_presentation(choose_chart_and_wire(*in.arrangement, in.lattice));
    CHECK(p.num_generators() == in.size());
    CHECK(p.num_relators() == event_relator_count(choose_chart_and_wire(*in.arrangement, in.lattice)) + 1);
    const auto ab = abelianize(p);
    CHECK(ab.free_rank == static_cast<std::size_t>(in.size() - 1));
    CHECK(ab.torsion_free());
    for (int i = 0; i < p.num_generators(); ++i) CHECK(p.meridian_of[static_cast<std::size_t>(i)] == i);
    CHECK(diagonal_hom(p) == std::vector<std::int64_t>(static_cast<std::size_t>(in.size()), 1));
  }
}

TEST_CASE("supplied charts are validated") {
  const auto arr = fixtures::braid();
  const auto lat = build_lattice(arr);
  CHECK_THROWS_AS(choose_chart_and_wire(arr, lat, Chart{{1, 0, 0, 0, 1, 0, 0, 0, 0}}), ValidationError);
  // Identity chart: z = 0 is a line of the braid arrangement.
  CHECK_THROWS_AS(choose_chart_and_wire(arr, lat, Chart{}), ValidationError);
}

TEST_CASE("twisted dimensions do not depend on the chart") {
  for (const auto& name : {"braid", "falk_A", "falk_A_prime", "pencil3"}) {
    const auto in = fixtures::by_name(name);
    const auto charts = usable_charts(*in.arrangement, in.lattice, 4);
    REQUIRE(charts.size() >= 2);
    std::optional<std::map<int, int>> first;
    for (const auto& ch : charts) {
      const auto p = braid_presentation(choose_chart_and_wire(*in.arrangement, in.lattice, ch));
      const auto e = all_e_r(p);
      if (!first) first = e;
      CAPTURE(name);
      CHECK(e == *first);
    }
  }
}

TEST_CASE("generic arrangements give abelian groups") {
  const auto in = fixtures::by_name("generic3");
  const auto p = braid_presentation(choose_chart_and_wire(*in.arrangement, in.lattice));
  for (int r : {2, 3, 5}) {
    Character chi{r, {1, r - 1, 0}};
    CHECK(twisted_h1_dim(p, chi) == 0);
  }
}

TEST_CASE("a single line has trivial fundamental group") {
  const Arrangement one("one", {ProjLine::make(1, 0, 0)});
  const auto p = braid_presentation(choose_chart_and_wire(one, build_lattice(one)));
  CHECK(abelianize(p).free_rank == 0);
}
