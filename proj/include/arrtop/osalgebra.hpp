#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/numeric.hpp"

namespace arrtop {

/// Coefficient field: Q (p == 0) or F_p.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws ArgumentError unless p is prime.
  static FieldSpec prime(std::int64_t p);

  bool is_rational() const { return p_ == 0; }
  std::int64_t characteristic() const { return p_; }
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

/// A degree-one class a = sum a_H e_H. Over F_p the entries are residues.
struct AomotoClass {
  FieldSpec field = FieldSpec::rationals();
  std::vector<Rational> coords;

  bool is_zero() const;

  /// The diagonal element sigma = sum e_H.
  static AomotoClass diagonal(FieldSpec field, int n);
  static AomotoClass from_integers(FieldSpec field, const std::vector<std::int64_t>& v);
};

/// Degree <= 2 part of the Orlik-Solomon algebra. A^2 is the direct sum over
/// flats X of a space with basis b_2, ..., b_m, where b_i is the class of
/// e_{H_1} e_{H_i} for the sorted lines H_1 < ... < H_m of X. In that basis
/// e_{H_i} e_{H_j} = b_j - b_i (i < j, b_1 = 0).
class OSTruncation {
 public:
  OSTruncation(const IntersectionLattice& lat, FieldSpec field);

  const FieldSpec& field() const { return field_; }
  int n() const { return n_; }
  int dim1() const { return n_; }
  int dim2() const { return dim2_; }

  /// e_H * e_K as a sparse vector (A^2 coordinate, coefficient in {-1, +1}).
  std::vector<std::pair<int, int>> cup(int h, int k) const;

  /// Matrix of b -> a*b from A^1 to A^2 (dim2 rows, n columns), entries over Q;
  /// callers reduce mod p where relevant.
  RationalMatrix multiplication_matrix(const AomotoClass& a) const;

  /// Rank of b -> a*b over the coefficient field.
  std::size_t rank_of_multiplication(const AomotoClass& a) const;

 private:
  FieldSpec field_;
  int n_;
  int dim2_ = 0;
  std::vector<int> flat_offset_;   ///< first A^2 coordinate of each flat
  std::vector<int> pair_flat_;     ///< n*n flat table
  std::vector<std::vector<int>> flat_lines_;
};

/// dim H^1(A, a) together with the a = 0 convention flag.
struct AomotoH1 {
  int dim = 0;
  bool trivial_class = false;  ///< a == 0: dim is b_1 = dim A^1, not pencil resonance
};

/// dim ker(a: A^1 -> A^2) - 1 for a != 0; dim A^1 (flagged) for a == 0.
/// Throws ArgumentError on a field mismatch.
AomotoH1 aomoto_h1_dim(const OSTruncation& os, const AomotoClass& a);

/// a in R^1_s(A, k) iff dim H^1(A, a) >= s. Throws ArgumentError if s < 1.
bool resonance_membership(const OSTruncation& os, const AomotoClass& a, int s);

/// The Aomoto-Betti number: dim H^1(A, sigma) over F_p.
int beta_p(const IntersectionLattice& lat, std::int64_t p);

}  // namespace arrtop
