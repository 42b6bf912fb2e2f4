#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"

namespace arrtop {

/// A candidate (k,d)-multinet. Classes are sorted and ordered by smallest member.
struct Multinet {
  std::vector<std::vector<int>> classes;
  std::vector<int> mult;               ///< m_H per line
  std::vector<int> base_locus;         ///< flat indices, sorted
  std::vector<int> base_multiplicity;  ///< n_X per base-locus flat (as seen from class 0)
  int weight = 0;                      ///< d (class-0 sum)

  int k() const { return static_cast<int>(classes.size()); }
  bool reduced() const;

  /// Fills base locus, n_X and d from a partition and multiplicities. The base
  /// locus is the set of flats whose lines meet at least two classes. Throws
  /// ValidationError unless `classes` partitions [0, lat.n) into nonempty blocks
  /// and every multiplicity is positive.
  static Multinet from_partition(const IntersectionLattice& lat, std::vector<std::vector<int>> classes,
                                 std::vector<int> mult);
  /// Same with all multiplicities equal to one.
  static Multinet reduced_from_partition(const IntersectionLattice& lat, std::vector<std::vector<int>> classes);

  /// Class index of each line.
  std::vector<int> class_of_line(int n) const;
};

struct MultinetVerdict {
  bool valid = false;
  /// 0 when valid; 1-4 for the violated axiom; 5 for gcd(m_H) != 1.
  int failed_axiom = 0;
  std::string diagnostic;
  std::vector<int> witness_lines;
  int witness_flat = -1;
};

/// Checks the four multinet axioms plus gcd(m) = 1. Axiom (4) is checked as
/// connectivity of the graph on class-i lines joined when they meet outside
/// the base locus. Throws ValidationError when k < 3.
MultinetVerdict verify_multinet(const IntersectionLattice& lat, const Multinet& cand);

/// Reduced, and every base-locus flat holds exactly one line of each class.
bool is_net(const Multinet& cand, const IntersectionLattice& lat);

/// Base locus of size > 1 forces k in {3,4}, and k == 3 when not reduced.
bool satisfies_pereira_yuzvinsky(const Multinet& cand);

struct MultinetSearchOptions {
  int min_classes = 3;
  int max_classes = 4;
  int max_weight = 3;     ///< bound on each m_H
  bool reduced_only = false;
  bool nets_only = false;
  std::size_t max_results = 100000;
  int max_lines = 15;     ///< refuse larger arrangements
};

/// Every verified multinet within the options, one per partition/multiplicity
/// pair up to class relabeling. Throws BudgetError when n > max_lines.
std::vector<Multinet> search_multinets(const IntersectionLattice& lat, const MultinetSearchOptions& opts);

/// All 3-nets up to class permutation. Throws BudgetError when n > max_lines.
std::vector<Multinet> enumerate_3nets(const IntersectionLattice& lat, std::size_t max_results = 1000,
                                      int max_lines = 15);

/// The d x d Latin square of a 3-net: entry (p,q) is the position r in class 2
/// of the third line through the meeting point of line p of class 0 and
/// line q of class 1.
std::vector<std::vector<int>> latin_square(const Multinet& net, const IntersectionLattice& lat);

/// Basis u_2 - u_1, ..., u_k - u_1 with u_a = sum_{H in class a} m_H e_H.
struct PencilSubspace {
  int k = 0;
  std::vector<std::vector<std::int64_t>> basis;
};

PencilSubspace pencil_subspace(const Multinet& cand, int n);

struct PointedMultinet {
  Multinet multinet;
  int line = -1;
};

/// Pairs (N, H) with m_H > 1 and m_H | n_X for every base-locus flat X on H.
std::vector<PointedMultinet> pointed_multinets(const IntersectionLattice& lat, const std::vector<Multinet>& multinets);
/// Same, over the multinets found by search_multinets.
std::vector<PointedMultinet> find_pointed_multinets(const IntersectionLattice& lat, const MultinetSearchOptions& opts);

}  // namespace arrtop
