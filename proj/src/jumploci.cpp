#include "arrtop/jumploci.hpp"

#include <numeric>

#include "arrtop/errors.hpp"

namespace arrtop {

bool Character::is_trivial() const {
  for (auto e : exponents)
    if (mod(e, order) != 0) return false;
  return true;
}

Character Character::conjugate() const {
  Character c{order, exponents};
  for (auto& e : c.exponents) e = mod(-e, order);
  return c;
}

Character Character::diagonal(const GroupPresentation& pres, int r) {
  if (r < 1) throw ArgumentError("character order must be positive");
  for (const auto& m : pres.meridian_of)
    if (!m) throw ArgumentError("diagonal character needs a presentation whose generators are meridians");
  return Character{r, std::vector<std::int64_t>(static_cast<std::size_t>(pres.num_generators()), 1 % r)};
}

void check_well_defined(const GroupPresentation& pres, const Character& chi) {
  if (chi.order < 1) throw ArgumentError("character order must be positive");
  if (static_cast<int>(chi.exponents.size()) != pres.num_generators())
    throw ArgumentError("character has " + std::to_string(chi.exponents.size()) + " exponents for " +
                        std::to_string(pres.num_generators()) + " generators");
  for (const auto& rel : pres.relators) {
    std::int64_t total = 0;
    for (int l : rel)
      total += (l > 0 ? 1 : -1) * chi.exponents[static_cast<std::size_t>(generator_of(l))];
    if (mod(total, chi.order) != 0)
      throw ValidationError("character is not defined: relator " + word_to_string(rel) + " maps to " +
                            std::to_string(mod(total, chi.order)) + " mod " + std::to_string(chi.order));
  }
}

std::vector<std::vector<CycloPoly>> fox_jacobian(const GroupPresentation& pres, const Character& chi) {
  check_well_defined(pres, chi);
  const int r = chi.order;
  const auto g = static_cast<std::size_t>(pres.num_generators());
  std::vector<std::vector<CycloPoly>> jac;
  jac.reserve(pres.relators.size());
  std::vector<std::vector<std::int64_t>> counts(g, std::vector<std::int64_t>(static_cast<std::size_t>(r)));
  for (const auto& rel : pres.relators) {
    for (auto& c : counts) std::fill(c.begin(), c.end(), 0);
    std::int64_t prefix = 0;
    for (int l : rel) {
      const auto j = static_cast<std::size_t>(generator_of(l));
      const std::int64_t ej = chi.exponents[j];
      if (l > 0) {
        ++counts[j][static_cast<std::size_t>(mod(prefix, r))];
        prefix += ej;
      } else {
        prefix -= ej;
        --counts[j][static_cast<std::size_t>(mod(prefix, r))];
      }
    }
    std::vector<CycloPoly> row;
    row.reserve(g);
    for (const auto& c : counts) row.push_back(CycloPoly::from_group_ring(r, c));
    jac.push_back(std::move(row));
  }
  return jac;
}

TwistedH1 twisted_h1(const GroupPresentation& pres, const Character& chi) {
  check_well_defined(pres, chi);
  if (chi.is_trivial()) return {static_cast<int>(abelianize(pres).free_rank), true};
  const auto rank = rank_over_cyclotomic(fox_jacobian(pres, chi), chi.order);
  return {pres.num_generators() - 1 - static_cast<int>(rank), false};
}

int twisted_h1_dim(const GroupPresentation& pres, const Character& chi) { return twisted_h1(pres, chi).dim; }

DepthReport depth_of(const GroupPresentation& pres, const Character& chi) {
  const auto h = twisted_h1(pres, chi);
  return {chi, h.dim, h.dim, h.trivial_character};
}

int e_r(const GroupPresentation& pi1_u, int r) {
  const int n = pi1_u.num_generators();
  if (r < 2) throw ArgumentError("e_r needs r > 1");
  if (n % r != 0)
    throw ArgumentError("rho_" + std::to_string(r) + " is not defined on pi_1(U): " + std::to_string(r) +
                        " does not divide n = " + std::to_string(n));
  return twisted_h1_dim(pi1_u, Character::diagonal(pi1_u, r));
}

std::map<int, int> all_e_r(const GroupPresentation& pi1_u) {
  std::map<int, int> out;
  for (auto d : divisors(pi1_u.num_generators()))
    if (d > 1) out[static_cast<int>(d)] = e_r(pi1_u, static_cast<int>(d));
  return out;
}

MilnorH1 milnor_h1_decomposition(const std::map<int, int>& e, int n) {
  if (n < 1) throw ArgumentError("number of lines must be positive");
  MilnorH1 out;
  out.delta.multiply_cyclotomic(1, n - 1);
  for (auto d : divisors(n)) {
    if (d == 1) continue;
    const auto it = e.find(static_cast<int>(d));
    if (it == e.end()) throw ArgumentError("missing e_" + std::to_string(d) + " for n = " + std::to_string(n));
    if (it->second < 0) throw ArgumentError("negative e_" + std::to_string(d));
    out.delta.multiply_cyclotomic(static_cast<int>(d), it->second);
  }
  out.b1_F = out.delta.degree();
  return out;
}

CosetSchreierData milnor_fiber_group(const GroupPresentation& pi1_u) {
  const auto hom = std::vector<std::int64_t>(static_cast<std::size_t>(pi1_u.num_generators()), 1);
  for (const auto& m : pi1_u.meridian_of)
    if (!m) throw ArgumentError("the Milnor fiber cover needs a presentation on meridians");
  return reidemeister_schreier(pi1_u, hom, pi1_u.num_generators());
}

TorsionPointCount count_torsion_points(const GroupPresentation& pres, int r, int s, std::int64_t budget) {
  if (r < 1) throw ArgumentError("character order must be positive");
  if (s < 1) throw ArgumentError("depth must be at least 1");
  const auto ab = abelianize(pres);
  TorsionPointCount out;
  out.order = r;
  out.depth = s;
  out.b1 = ab.free_rank;
  out.torsion = ab.torsion;

  // Per Smith coordinate: step between allowed exponents and their number.
  const std::size_t coords = ab.smith.cols;
  std::vector<std::int64_t> step(coords, 1), choices(coords, r);
  for (std::size_t i = 0; i < ab.smith.diagonal.size(); ++i) {
    const std::int64_t d = to_int64(ab.smith.diagonal[i] % r);
    const std::int64_t g = std::gcd(d == 0 ? r : d, static_cast<std::int64_t>(r));
    choices[i] = g;
    step[i] = r / g;
  }
  Integer total = 1;
  for (auto c : choices) total *= c;
  if (total > budget)
    throw BudgetError("counting order-" + std::to_string(r) + " characters needs " + total.get_str() +
                      " evaluations; budget is " + std::to_string(budget));
  out.examined = to_int64(total);

  const int g = pres.num_generators();
  std::vector<std::vector<std::int64_t>> image(static_cast<std::size_t>(g), std::vector<std::int64_t>(coords));
  for (int j = 0; j < g; ++j) {
    const auto row = ab.generator_image(j);
    for (std::size_t i = 0; i < coords; ++i) image[static_cast<std::size_t>(j)][i] = to_int64(row[i] % r);
  }

  std::vector<std::int64_t> digit(coords, 0);
  for (std::int64_t it = 0; it < out.examined; ++it) {
    Character chi{r, std::vector<std::int64_t>(static_cast<std::size_t>(g), 0)};
    for (int j = 0; j < g; ++j) {
      std::int64_t e = 0;
      for (std::size_t i = 0; i < coords; ++i) e += image[static_cast<std::size_t>(j)][i] * digit[i] * step[i];
      chi.exponents[static_cast<std::size_t>(j)] = mod(e, r);
    }
    const auto h = twisted_h1(pres, chi);
    if (h.trivial_character) out.trivial_included = h.dim >= s;
    if (h.dim >= s) ++out.count;
    for (std::size_t i = 0; i < coords; ++i) {
      if (++digit[i] < choices[i]) break;
      digit[i] = 0;
    }
  }
  return out;
}

ModularBound modular_bound_check(const GroupPresentation& pi1_u, int beta_p, std::int64_t p, int s) {
  if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
  if (s < 1) throw ArgumentError("prime-power exponent must be at least 1");
  ModularBound out{p, s, false, 0, beta_p, true};
  std::int64_t q = 1;
  for (int i = 0; i < s; ++i) q *= p;
  if (pi1_u.num_generators() % q != 0) {
    out.vacuous = true;
    return out;
  }
  out.e = e_r(pi1_u, static_cast<int>(q));
  out.holds = out.e <= beta_p;
  return out;
}

}  // namespace arrtop
