#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/cyclotomic.hpp"
#include "arrtop/multinet.hpp"

namespace arrtop {

/// A monodromy polynomial predicted by the conjectural combinatorial formula.
/// Kept apart from computed factorizations so the two cannot be mixed up.
struct ConjecturalDelta {
  static constexpr const char* kLabel = "CONJECTURAL";
  CharPolyFactorization formula;

  bool agrees_with(const CharPolyFactorization& computed) const { return formula == computed; }
};

/// (t-1)^{n-1} (t^2+t+1)^{beta3} for lattices with only double and triple
/// points. Throws ValidationError if a flat of multiplicity >= 4 exists and
/// ConsistencyError if beta3 is outside {0, 1, 2}.
CharPolyFactorization delta_triple_points(const IntersectionLattice& lat, int beta3);

/// (t-1)^{n-1} ((t+1)(t^2+1))^{beta2} (t^2+t+1)^{beta3}. Requires an
/// essential (rank 3) arrangement: throws ValidationError for pencils.
ConjecturalDelta delta_conjectural(const IntersectionLattice& lat, int beta2, int beta3);

/// True when no flat of multiplicity > 2 has multiplicity divisible by p, in
/// which case beta_p must vanish.
bool beta_vanishing_forced(const IntersectionLattice& lat, std::int64_t p);

/// e_r >= bound, with the computed value when one is available.
struct BoundClaim {
  int r = 0;
  int bound = 0;
  int k = 0;  ///< size of the multinet behind the claim
  std::optional<int> computed;

  std::optional<bool> holds() const;
};

/// For each reduced k-multinet: e_k >= k - 2, and e_{p^r} >= k - 2 for
/// 1 <= r <= s when k = p^s. Claims are merged per r keeping the largest
/// bound. Throws ArgumentError for non-reduced input.
std::vector<BoundClaim> multinet_lower_bounds(const std::vector<Multinet>& multinets, int n,
                                              const std::map<int, int>* computed = nullptr);

/// e_2 = e_4 = beta_2, claimed when some listed multinet is a 4-net and
/// beta_2 <= 2.
struct Beta4Claim {
  int beta2 = 0;
  std::optional<int> e2;
  std::optional<int> e4;

  std::optional<bool> holds() const;
};

std::optional<Beta4Claim> beta4_equalities(const IntersectionLattice& lat, const std::vector<Multinet>& multinets,
                                           int beta2, const std::map<int, int>* computed = nullptr);

}  // namespace arrtop
