#include "arrtop/milnor.hpp"

#include <algorithm>

#include "arrtop/errors.hpp"

namespace arrtop {

CharPolyFactorization delta_triple_points(const IntersectionLattice& lat, int beta3) {
  for (const auto& [m, count] : lat.census)
    if (m > 3)
      throw ValidationError("lattice has " + std::to_string(count) + " flat(s) of multiplicity " + std::to_string(m) +
                            "; the triple-point formula does not apply, use the conjectural formula");
  if (beta3 < 0 || beta3 > 2)
    throw ConsistencyError("beta_3 = " + std::to_string(beta3) + " is outside {0, 1, 2} on a triple-point lattice");
  CharPolyFactorization d;
  d.multiply_cyclotomic(1, lat.n - 1);
  d.multiply_cyclotomic(3, beta3);
  return d;
}

ConjecturalDelta delta_conjectural(const IntersectionLattice& lat, int beta2, int beta3) {
  if (lat.n < 3 || lat.is_pencil())
    throw ValidationError("the conjectural formula needs an essential arrangement of rank 3");
  if (beta2 < 0 || beta3 < 0) throw ArgumentError("Aomoto-Betti numbers are non-negative");
  ConjecturalDelta d;
  d.formula.multiply_cyclotomic(1, lat.n - 1);
  d.formula.multiply_cyclotomic(2, beta2);
  d.formula.multiply_cyclotomic(4, beta2);
  d.formula.multiply_cyclotomic(3, beta3);
  return d;
}

bool beta_vanishing_forced(const IntersectionLattice& lat, std::int64_t p) {
  if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
  for (const auto& [m, count] : lat.census)
    if (m > 2 && m % p == 0) return false;
  return true;
}

std::optional<bool> BoundClaim::holds() const {
  if (!computed) return std::nullopt;
  return *computed >= bound;
}

std::vector<BoundClaim> multinet_lower_bounds(const std::vector<Multinet>& multinets, int n,
                                              const std::map<int, int>* computed) {
  std::map<int, BoundClaim> merged;
  auto claim = [&](int r, int bound, int k) {
    auto& c = merged[r];
    if (c.r == 0 || bound > c.bound) c = BoundClaim{r, bound, k, std::nullopt};
  };
  for (const auto& mn : multinets) {
    if (!mn.reduced()) throw ArgumentError("lower bounds need reduced multinets");
    const int k = mn.k();
    claim(k, k - 2, k);
    for (std::int64_t p = 2; p <= k; ++p) {
      if (!is_prime(p) || k % p != 0) continue;
      int rest = k;
      while (rest % p == 0) rest /= static_cast<int>(p);
      if (rest != 1) break;
      for (int q = static_cast<int>(p); q <= k; q *= static_cast<int>(p)) claim(q, k - 2, k);
    }
  }
  std::vector<BoundClaim> out;
  for (auto& [r, c] : merged) {
    if (computed && n % r == 0)
      if (auto it = computed->find(r); it != computed->end()) c.computed = it->second;
    out.push_back(c);
  }
  return out;
}

std::optional<bool> Beta4Claim::holds() const {
  if (!e2 || !e4) return std::nullopt;
  return *e2 == beta2 && *e4 == beta2;
}

std::optional<Beta4Claim> beta4_equalities(const IntersectionLattice& lat, const std::vector<Multinet>& multinets,
                                           int beta2, const std::map<int, int>* computed) {
  if (beta2 > 2) return std::nullopt;
  const bool has_4net = std::any_of(multinets.begin(), multinets.end(),
                                    [&](const Multinet& m) { return m.k() == 4 && is_net(m, lat); });
  if (!has_4net) return std::nullopt;
  Beta4Claim c;
  c.beta2 = beta2;
  if (computed) {
    if (auto it = computed->find(2); it != computed->end()) c.e2 = it->second;
    if (auto it = computed->find(4); it != computed->end()) c.e4 = it->second;
  }
  return c;
}

}  // namespace arrtop
