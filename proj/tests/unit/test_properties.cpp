#include <doctest.h>

#include <random>

#include "arrtop/boundary.hpp"
#include "arrtop/errors.hpp"
#include "arrtop/fixtures.hpp"
#include "arrtop/jumploci.hpp"
#include "arrtop/milnor.hpp"
#include "arrtop/multinet.hpp"
#include "arrtop/osalgebra.hpp"
#include "arrtop/pi1.hpp"
#include "oracles.hpp"

using namespace arrtop;

namespace {

std::vector<std::set<int>> flat_sets(const IntersectionLattice& lat) {
  std::vector<std::set<int>> out;
  for (const auto& f : lat.flats) out.emplace_back(f.lines.begin(), f.lines.end());
  std::sort(out.begin(), out.end());
  return out;
}

Arrangement random_arrangement(std::mt19937_64& rng, int n) {
  std::set<ProjLine> seen;
  std::vector<ProjLine> lines;
  while (static_cast<int>(lines.size()) < n) {
    std::int64_t c[3];
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % 5) - 2;
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    const auto l = ProjLine::make(c[0], c[1], c[2]);
    if (seen.insert(l).second) lines.push_back(l);
  }
  return Arrangement("random", lines);
}

Arrangement transform(const Arrangement& arr, const std::array<std::int64_t, 9>& m) {
  // Lines transform by the transpose: l' = l * M.
  std::vector<ProjLine> out;
  for (const auto& l : arr.lines()) {
    const auto& c = l.coeffs;
    out.push_back(ProjLine::make(c[0] * m[0] + c[1] * m[3] + c[2] * m[6], c[0] * m[1] + c[1] * m[4] + c[2] * m[7],
                                 c[0] * m[2] + c[1] * m[5] + c[2] * m[8]));
  }
  return Arrangement(arr.label(), out);
}

struct Realized {
  std::string name;
  ArrangementInput in;
  GroupPresentation u;
};

const std::vector<Realized>& realized_fixtures() {
  static const std::vector<Realized> all = [] {
    std::vector<Realized> out;
    for (const auto& name : fixtures::names()) {
      auto in = fixtures::by_name(name);
      if (!in.realized()) continue;
      auto u = braid_presentation(choose_chart_and_wire(*in.arrangement, in.lattice));
      out.push_back({name, std::move(in), std::move(u)});
    }
    return out;
  }();
  return all;
}

IntersectionLattice cyclic_net_lattice(int d) {
  std::vector<std::vector<int>> flats;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) flats.push_back({i, d + j, 2 * d + (i + j) % d});
  return lattice_from_incidence(3 * d, flats);
}

void check_latin_round_trip(const Multinet& net, const IntersectionLattice& lat) {
  const auto sq = latin_square(net, lat);
  const std::size_t d = sq.size();
  for (std::size_t p = 0; p < d; ++p) {
    std::set<int> row(sq[p].begin(), sq[p].end()), col;
    for (std::size_t q = 0; q < d; ++q) col.insert(sq[q][p]);
    CHECK(row.size() == d);
    CHECK(col.size() == d);
    CHECK(*row.begin() == 0);
    CHECK(*row.rbegin() == static_cast<int>(d) - 1);
  }
  std::set<std::set<int>> rebuilt, base;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      rebuilt.insert({net.classes[0][p], net.classes[1][q], net.classes[2][static_cast<std::size_t>(sq[p][q])]});
  for (int f : net.base_locus) {
    const auto& l = lat.flats[static_cast<std::size_t>(f)].lines;
    base.insert(std::set<int>(l.begin(), l.end()));
  }
  CHECK(rebuilt == base);
}

}  // namespace

TEST_CASE("lattice identities on 200 random arrangements") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto arr = random_arrangement(rng, n);
    const auto lat = build_lattice(arr);
    CHECK_NOTHROW(lat.check_invariants());
    int pairs = 0;
    for (const auto& f : lat.flats) pairs += f.multiplicity() * (f.multiplicity() - 1) / 2;
    CHECK(pairs == n * (n - 1) / 2);
    std::vector<oracle::Line> raw;
    for (const auto& l : arr.lines()) raw.push_back(l.coeffs);
    auto expected = oracle::brute_points(raw);
    std::sort(expected.begin(), expected.end());
    CHECK(flat_sets(lat) == expected);
  }
}

TEST_CASE("normalization is idempotent and scale invariant") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t c[3];
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % 41) - 20;
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    const auto p = normalize_triple(c[0], c[1], c[2]);
    CHECK(normalize_triple(p[0], p[1], p[2]) == p);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 7) - 3;
    if (k != 0) CHECK(normalize_triple(k * c[0], k * c[1], k * c[2]) == p);
  }
}

TEST_CASE("census is invariant under projective transformations") {
  const std::vector<std::array<std::int64_t, 9>> maps{
      {1, 1, 0, 0, 1, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 1, 1, 0, 0}, {2, 1, 1, 1, 1, 0, 0, 0, 1}, {1, 0, 0, 2, 1, 0, -1, 3, 1}};
  for (const auto& r : realized_fixtures())
    for (const auto& m : maps) {
      const auto t = transform(*r.in.arrangement, m);
      const auto lat = build_lattice(t);
      CHECK(lat.census == r.in.lattice.census);
      CHECK(flat_sets(lat) == flat_sets(r.in.lattice));
    }
}

TEST_CASE("aomoto_h1_dim is invariant under scaling the class") {
  std::mt19937_64 rng(13);
  for (const auto& name : fixtures::names()) {
    const auto in = fixtures::by_name(name);
    for (std::int64_t p : {0, 3, 5}) {
      const FieldSpec fs = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
      const OSTruncation os(in.lattice, fs);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(in.size()));
        for (auto& x : a) x = static_cast<std::int64_t>(rng() % 5) - 2;
        const auto base = aomoto_h1_dim(os, AomotoClass::from_integers(fs, a));
        for (std::int64_t c : {2, -1, 4}) {
          if (p != 0 && c % p == 0) continue;
          auto b = a;
          for (auto& x : b) x *= c;
          CHECK(aomoto_h1_dim(os, AomotoClass::from_integers(fs, b)).dim == base.dim);
        }
      }
    }
  }
}

TEST_CASE("conjugation symmetry: exhaustive at order 3 on the Falk pair") {
  for (const auto& r : realized_fixtures()) {
    if (r.name != "falk_A" && r.name != "falk_A_prime") continue;
    std::vector<std::int64_t> e(6, 0);
    int checked = 0;
    for (int code = 0; code < 729; ++code) {
      int c = code;
      std::int64_t sum = 0;
      for (auto& x : e) {
        x = c % 3;
        c /= 3;
        sum += x;
      }
      if (sum % 3 != 0) continue;
      const Character chi{3, e};
      CHECK(twisted_h1_dim(r.u, chi) == twisted_h1_dim(r.u, chi.conjugate()));
      ++checked;
    }
    CHECK(checked == 243);
  }
}

TEST_CASE("conjugation symmetry on random higher-order characters") {
  std::mt19937_64 rng(17);
  for (const auto& r : realized_fixtures()) {
    const int n = r.u.num_generators();
    for (int order : {4, 5, 6}) {
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(n));
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < e.size(); ++i) sum += e[i] = static_cast<std::int64_t>(rng() % static_cast<unsigned>(order));
        e.back() = mod(-sum, order);
        const Character chi{order, e};
        CHECK(twisted_h1_dim(r.u, chi) == twisted_h1_dim(r.u, chi.conjugate()));
      }
    }
  }
}

TEST_CASE("Maschke decomposition: b_1(F) is the sum over powers of the diagonal character") {
  for (const auto& r : realized_fixtures()) {
    const int n = r.u.num_generators();
    int total = 0;
    for (int j = 0; j < n; ++j) {
      Character chi{n, std::vector<std::int64_t>(static_cast<std::size_t>(n), j)};
      total += twisted_h1_dim(r.u, chi);
    }
    const auto fiber = abelianize(milnor_fiber_group(r.u).subgroup);
    CAPTURE(r.name);
    CHECK(total == static_cast<int>(fiber.free_rank));
  }
}

TEST_CASE("degree identity deg Delta = b_1(F)") {
  for (const auto& r : realized_fixtures()) {
    const auto m = milnor_h1_decomposition(all_e_r(r.u), r.u.num_generators());
    CHECK(m.delta.degree() == m.b1_F);
    CHECK(static_cast<int>(m.delta.expand().size()) - 1 == m.b1_F);
  }
}

TEST_CASE("modular bound e_{p^s} <= beta_p on every fixture") {
  for (const auto& r : realized_fixtures())
    for (std::int64_t p : {2, 3})
      for (int s : {1, 2}) {
        const auto b = modular_bound_check(r.u, beta_p(r.in.lattice, p), p, s);
        CAPTURE(r.name);
        CHECK(b.holds);
      }
}

TEST_CASE("Latin square round trip for every enumerated net") {
  int nets = 0;
  for (const auto& name : fixtures::names()) {
    const auto lat = fixtures::by_name(name).lattice;
    for (const auto& net : enumerate_3nets(lat)) {
      check_latin_round_trip(net, lat);
      ++nets;
    }
  }
  for (int d = 2; d <= 4; ++d) {
    const auto lat = cyclic_net_lattice(d);
    const auto found = enumerate_3nets(lat);
    REQUIRE_FALSE(found.empty());
    for (const auto& net : found) {
      check_latin_round_trip(net, lat);
      ++nets;
    }
  }
  CHECK(nets >= 4);
}

TEST_CASE("Pereira-Yuzvinsky validator never fires on verified multinets") {
  for (const auto& name : fixtures::names()) {
    const auto lat = fixtures::by_name(name).lattice;
    MultinetSearchOptions opts;
    opts.min_classes = 3;
    opts.max_classes = 5;
    opts.max_weight = lat.n > 9 ? 1 : 2;
    for (const auto& m : search_multinets(lat, opts)) {
      CHECK(verify_multinet(lat, m).valid);
      CHECK(satisfies_pereira_yuzvinsky(m));
    }
  }
  for (int d = 2; d <= 4; ++d)
    for (const auto& m : enumerate_3nets(cyclic_net_lattice(d))) CHECK(satisfies_pereira_yuzvinsky(m));
}

TEST_CASE("boundary invariants agree with the oracles on random arrangements") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto lat = build_lattice(random_arrangement(rng, n));
    CHECK(build_graph(lat).b1() == oracle::graph_b1(n, flat_sets(lat)));
    CHECK(delta_boundary_F(lat).expand() == oracle::boundary_polynomial(n, flat_sets(lat)));
  }
}

TEST_CASE("random arrangements: presentation abelianizes correctly and e_r matches RS") {
  std::mt19937_64 rng(41);
  int done = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const auto arr = random_arrangement(rng, n);
    const auto lat = build_lattice(arr);
    if (lat.is_pencil()) continue;
    const auto u = braid_presentation(choose_chart_and_wire(arr, lat));
    CHECK(abelianize(u).free_rank == static_cast<std::size_t>(n - 1));
    const auto m = milnor_h1_decomposition(all_e_r(u), n);
    CHECK(static_cast<int>(abelianize(milnor_fiber_group(u).subgroup).free_rank) == m.b1_F);
    ++done;
  }
  CHECK(done > 10);
}
