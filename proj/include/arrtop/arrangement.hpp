#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arrtop {

/// Integer triple in canonical projective form: gcd 1, first nonzero entry positive.
using ProjPoint = std::array<std::int64_t, 3>;

/// Largest absolute coefficient accepted on input. Keeps every cross product
/// of two lines inside 64 bits.
inline constexpr std::int64_t kMaxCoefficient = (std::int64_t{1} << 30) - 1;

/// Canonical form of a nonzero integer triple. Throws ValidationError on (0,0,0).
ProjPoint normalize_triple(std::int64_t a, std::int64_t b, std::int64_t c);

/// The projective line a*x + b*y + c*z = 0.
struct ProjLine {
  std::array<std::int64_t, 3> coeffs{};

  /// Builds the canonical representative; rejects the zero triple and
  /// coefficients larger than kMaxCoefficient.
  static ProjLine make(std::int64_t a, std::int64_t b, std::int64_t c);

  bool contains(const ProjPoint& p) const;
  std::string to_string() const;

  auto operator<=>(const ProjLine&) const = default;
};

/// Intersection point of two distinct lines.
ProjPoint meet(const ProjLine& l, const ProjLine& m);

/// An ordered list of distinct projective lines in CP^2 (a central arrangement
/// of planes in C^3). Line indices are positions in `lines`.
class Arrangement {
 public:
  Arrangement() = default;

  /// Validates: n >= 1, no two lines equal after normalization.
  Arrangement(std::string label, std::vector<ProjLine> lines);

  const std::string& label() const { return label_; }
  const std::vector<ProjLine>& lines() const { return lines_; }
  const ProjLine& line(int i) const { return lines_.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(lines_.size()); }

  /// True iff the lines do not all pass through one point (rank 3).
  bool essential() const { return essential_; }

 private:
  std::string label_;
  std::vector<ProjLine> lines_;
  bool essential_ = false;
};

/// A rank-2 flat: an intersection point together with every line through it.
struct Flat2 {
  std::optional<ProjPoint> point;  ///< absent for incidence-only input
  std::vector<int> lines;          ///< sorted line indices, size >= 2

  int multiplicity() const { return static_cast<int>(lines.size()); }
  bool contains_line(int h) const;
};

/// The rank <= 2 part of the intersection lattice.
struct IntersectionLattice {
  int n = 0;
  std::vector<Flat2> flats;
  std::map<int, int> census;  ///< multiplicity -> number of flats

  /// Index of the unique flat containing lines h != k.
  int flat_of(int h, int k) const;

  /// Flat indices containing line h, in flat order.
  std::vector<int> flats_on_line(int h) const;

  /// Checks pair coverage and the sum identity; throws ConsistencyError.
  void check_invariants() const;

  /// True iff every pair of lines meets in a flat of multiplicity 2.
  bool all_double() const;

  /// Lines all through a single flat.
  bool is_pencil() const;

  std::vector<int> pair_table;  ///< n*n table of flat indices, -1 on the diagonal
};

/// All maximal rank-2 flats, ordered lexicographically by normalized point.
IntersectionLattice build_lattice(const Arrangement& arr);

/// Lattice from abstract incidence data. Listed flats must have >= 2 lines and
/// share at most one line pairwise; uncovered pairs become double points.
/// Flats are ordered lexicographically by their sorted line sets.
IntersectionLattice lattice_from_incidence(int n, std::vector<std::vector<int>> flats);

struct MultiplicityReport {
  int r = 0;
  /// Some flat of multiplicity q >= 3 has r | q. When false, e_r vanishes.
  bool divisible_flat_exists = false;
  std::vector<int> divisible_flats;
  /// No flat has multiplicity 3r' with r' > 1.
  bool no_flats_of_multiplicity_3r = false;
  /// Every flat has multiplicity 2 or 3.
  bool only_double_and_triple = false;
};

/// Throws ArgumentError when r < 2.
MultiplicityReport multiplicity_predicates(const IntersectionLattice& lat, int r);

struct CollinearReport {
  std::vector<std::vector<int>> high_flats_on_line;  ///< per line: flats with multiplicity >= 3
  std::vector<int> common_lines;                      ///< lines holding every such flat
  bool common_line_exists = false;
};

CollinearReport collinear_triples_report(const IntersectionLattice& lat);

}  // namespace arrtop
