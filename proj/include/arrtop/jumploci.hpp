#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arrtop/cyclotomic.hpp"
#include "arrtop/group.hpp"
#include "arrtop/numeric.hpp"

namespace arrtop {

/// A rank-one character of order dividing r: generator g maps to
/// zeta_r^{exponents[g]}.
struct Character {
  int order = 1;
  std::vector<std::int64_t> exponents;

  bool is_trivial() const;
  /// The complex-conjugate character.
  Character conjugate() const;

  /// rho_r: every meridian to zeta_r. Throws ArgumentError if some generator
  /// is not a meridian.
  static Character diagonal(const GroupPresentation& pres, int r);
};

/// Throws ValidationError naming the first relator whose image is not 0 mod r.
void check_well_defined(const GroupPresentation& pres, const Character& chi);

/// Fox Jacobian (relators x generators) evaluated at chi, entries in Z[x]/Phi_r.
std::vector<std::vector<CycloPoly>> fox_jacobian(const GroupPresentation& pres, const Character& chi);

/// dim H_1 with coefficients in the rank-one local system of chi.
struct TwistedH1 {
  int dim = 0;
  bool trivial_character = false;  ///< dim is b_1 of the abelianization
};

/// g - 1 - rank J(chi) for nontrivial chi; b_1 (flagged) for trivial chi.
TwistedH1 twisted_h1(const GroupPresentation& pres, const Character& chi);
int twisted_h1_dim(const GroupPresentation& pres, const Character& chi);

/// depth of chi: the largest s with chi in V_s, equal to dim H_1 in degree one.
struct DepthReport {
  Character character;
  int dim = 0;
  int depth = 0;
  bool trivial_character = false;
};

DepthReport depth_of(const GroupPresentation& pres, const Character& chi);

/// e_r = depth of rho_r on a presentation of pi_1(U) whose generators are the
/// n meridians. Throws ArgumentError unless r > 1 and r | n.
int e_r(const GroupPresentation& pi1_u, int r);

/// e_r for every divisor 1 < r | n.
std::map<int, int> all_e_r(const GroupPresentation& pi1_u);

struct MilnorH1 {
  int b1_F = 0;
  CharPolyFactorization delta;
};

/// Delta(t) = (t-1)^{n-1} prod Phi_r^{e_r} and b_1(F) = n - 1 + sum phi(r) e_r.
/// Throws ArgumentError if some divisor 1 < r | n is missing from e.
MilnorH1 milnor_h1_decomposition(const std::map<int, int>& e, int n);

/// Presentation of pi_1(F) as the kernel of the diagonal map pi_1(U) -> Z_n.
CosetSchreierData milnor_fiber_group(const GroupPresentation& pi1_u);

struct TorsionPointCount {
  int order = 0;
  int depth = 0;
  std::int64_t count = 0;      ///< characters with eta^r = 1 and depth >= s
  std::int64_t examined = 0;   ///< size of the r-torsion of the character group
  std::size_t b1 = 0;          ///< free rank of H_1
  std::vector<Integer> torsion;  ///< torsion invariant factors of H_1
  bool trivial_included = false;
};

/// Exhaustive count of the characters eta of H_1(G) with eta^r = 1 and
/// twisted H_1 dimension >= s, the trivial character counted with its b_1
/// value. Characters are parametrized through the Smith basis of H_1 (with
/// torsion, over the r-torsion of the full character group). Throws
/// BudgetError when the number of characters exceeds the budget.
TorsionPointCount count_torsion_points(const GroupPresentation& pres, int r, int s, std::int64_t budget = 100000);

struct ModularBound {
  std::int64_t p = 0;
  int s = 0;
  bool vacuous = false;  ///< p^s does not divide n
  int e = 0;             ///< e_{p^s}
  int beta = 0;          ///< beta_p
  bool holds = true;
};

/// Compares e_{p^s} with beta_p; the caller supplies both values' sources.
ModularBound modular_bound_check(const GroupPresentation& pi1_u, int beta_p, std::int64_t p, int s);

}  // namespace arrtop
