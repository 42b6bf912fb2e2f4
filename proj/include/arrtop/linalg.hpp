#pragma once

#include <cstdint>
#include <vector>

#include "arrtop/numeric.hpp"

namespace arrtop {

using ModMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over F_p of an integer matrix (entries reduced mod p first).
std::size_t rank_mod_p(ModMatrix m, std::int64_t p);

/// Rank over Q.
std::size_t rank_rational(RationalMatrix m);

/// Rank over Q of an integer matrix, by fraction-free (Bareiss) elimination.
std::size_t rank_integer(IntMatrix m);

/// Smith normal form D = U * A * V of an integer matrix A (rows x cols), with
/// U and V unimodular. Only V and its inverse are kept: they map generator
/// coordinates to the diagonal basis of coker(A^T) = Z^cols / rowspace(A).
struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> diagonal;  ///< nonzero invariant factors d_1 | d_2 | ... (positive)
  IntMatrix V;                    ///< cols x cols
  IntMatrix V_inverse;            ///< cols x cols

  std::size_t rank() const { return diagonal.size(); }
  /// Rank of Z^cols / rowspace(A) (number of zero diagonal slots).
  std::size_t free_rank() const { return cols - diagonal.size(); }
  /// Invariant factors > 1 (the torsion of the cokernel).
  std::vector<Integer> torsion() const;
};

/// `cols` is needed when `a` has no rows.
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

}  // namespace arrtop
