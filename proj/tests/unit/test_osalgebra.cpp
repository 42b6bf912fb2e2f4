#include <doctest.h>

#include <random>

#include "arrtop/errors.hpp"
#include "arrtop/fixtures.hpp"
#include "arrtop/osalgebra.hpp"
#include "oracles.hpp"

using namespace arrtop;

namespace {

std::vector<std::set<int>> flat_sets(const IntersectionLattice& lat) {
  std::vector<std::set<int>> out;
  for (const auto& f : lat.flats) out.emplace_back(f.lines.begin(), f.lines.end());
  return out;
}

int lib_h1(const IntersectionLattice& lat, std::int64_t p, const std::vector<std::int64_t>& a) {
  const FieldSpec fs = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
  return aomoto_h1_dim(OSTruncation(lat, fs), AomotoClass::from_integers(fs, a)).dim;
}

}  // namespace

TEST_CASE("coefficient fields") {
  CHECK(FieldSpec::prime(5).characteristic() == 5);
  CHECK(FieldSpec::rationals().is_rational());
  CHECK_THROWS_AS(FieldSpec::prime(4), ArgumentError);
  CHECK_THROWS_AS(FieldSpec::prime(1), ArgumentError);
}

TEST_CASE("dim A^2 matches the exterior-algebra oracle") {
  for (const auto& name : fixtures::names()) {
    const auto in = fixtures::by_name(name);
    CAPTURE(name);
    const OSTruncation os(in.lattice, FieldSpec::rationals());
    CHECK(os.dim2() == oracle::os_dim2(in.size(), flat_sets(in.lattice)));
  }
}

TEST_CASE("cup products are antisymmetric and vanish on squares") {
  const OSTruncation os(build_lattice(fixtures::braid()), FieldSpec::rationals());
  for (int h = 0; h < os.n(); ++h) {
    CHECK(os.cup(h, h).empty());
    for (int k = 0; k < os.n(); ++k) {
      auto a = os.cup(h, k), b = os.cup(k, h);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first == b[i].first);
        CHECK(a[i].second == -b[i].second);
      }
    }
  }
}

TEST_CASE("Aomoto H^1 matches the oracle on random classes") {
  std::mt19937_64 rng(7);
  for (const auto& name : fixtures::names()) {
    const auto in = fixtures::by_name(name);
    const auto flats = flat_sets(in.lattice);
    for (std::int64_t p : {0, 2, 3, 5}) {
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(in.size()));
        for (auto& x : a) x = static_cast<std::int64_t>(rng() % 5) - 2;
        CAPTURE(name);
        CAPTURE(p);
        CHECK(lib_h1(in.lattice, p, a) == oracle::os_h1(in.size(), flats, a, p));
      }
    }
  }
}

TEST_CASE("Aomoto-Betti numbers") {
  for (const auto& name : {"falk_A", "falk_A_prime"}) {
    const auto lat = fixtures::by_name(name).lattice;
    CHECK(beta_p(lat, 2) == 0);
    CHECK(beta_p(lat, 3) == 0);
  }
  const auto braid = build_lattice(fixtures::braid());
  CHECK(beta_p(braid, 3) == 1);
  CHECK(beta_p(braid, 2) == 0);
  CHECK(beta_p(fixtures::hessian_incidence().lattice, 2) == 2);
  CHECK(beta_p(build_lattice(fixtures::reduced_multinet12()), 3) == 1);
  CHECK_THROWS_AS(beta_p(braid, 6), ArgumentError);
  for (const auto& name : fixtures::names()) {
    const auto in = fixtures::by_name(name);
    const std::vector<std::int64_t> ones(static_cast<std::size_t>(in.size()), 1);
    for (std::int64_t p : {2, 3})
      CHECK(beta_p(in.lattice, p) == oracle::os_h1(in.size(), flat_sets(in.lattice), ones, p));
  }
}

TEST_CASE("the zero class is flagged") {
  const OSTruncation os(build_lattice(fixtures::braid()), FieldSpec::prime(3));
  const auto h = aomoto_h1_dim(os, AomotoClass::from_integers(FieldSpec::prime(3), {3, 0, 6, 0, 0, 0}));
  CHECK(h.trivial_class);
  CHECK(h.dim == 6);
}

TEST_CASE("resonance membership and argument checks") {
  const auto lat = build_lattice(fixtures::braid());
  const OSTruncation os3(lat, FieldSpec::prime(3));
  const auto sigma = AomotoClass::diagonal(FieldSpec::prime(3), 6);
  CHECK(resonance_membership(os3, sigma, 1));
  CHECK_FALSE(resonance_membership(os3, sigma, 2));
  CHECK_THROWS_AS(resonance_membership(os3, sigma, 0), ArgumentError);
  const OSTruncation os5(lat, FieldSpec::prime(5));
  CHECK_THROWS_AS(aomoto_h1_dim(os5, sigma), ArgumentError);
  // A local component: e_0 + e_1 - 2 e_3 is resonant at the flat {0,1,3}.
  const int f = lat.flat_of(0, 1);
  const auto& lines = lat.flats[static_cast<std::size_t>(f)].lines;
  std::vector<std::int64_t> a(6, 0);
  a[static_cast<std::size_t>(lines[0])] = 1;
  a[static_cast<std::size_t>(lines[1])] = 1;
  a[static_cast<std::size_t>(lines[2])] = -2;
  CHECK(aomoto_h1_dim(OSTruncation(lat, FieldSpec::rationals()), AomotoClass::from_integers(FieldSpec::rationals(), a)).dim == 1);
}
