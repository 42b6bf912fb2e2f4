#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrtop/linalg.hpp"

namespace arrtop {

/// A word in a free group. Letter g+1 is generator g, -(g+1) its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// Free and cyclic reduction (the result is conjugate to w).
Word cyclic_reduce(Word w);
std::string word_to_string(const Word& w);

inline int letter(int generator, bool inverse = false) { return inverse ? -(generator + 1) : generator + 1; }
inline int generator_of(int letter) { return (letter > 0 ? letter : -letter) - 1; }

struct GroupPresentation {
  std::vector<std::string> generator_tags;
  /// Line index for meridian generators, nullopt for auxiliary generators.
  std::vector<std::optional<int>> meridian_of;
  std::vector<Word> relators;

  int num_generators() const { return static_cast<int>(generator_tags.size()); }
  int num_relators() const { return static_cast<int>(relators.size()); }

  /// Exponent-sum matrix: one row per relator, one column per generator.
  IntMatrix relation_matrix() const;
};

/// H_1 of a presentation as Z^rank + torsion, with the SNF basis change.
struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  ///< invariant factors > 1
  SmithForm smith;

  /// Coordinates of generator g in the diagonal basis (entry i pairs with
  /// invariant factor i; entries past the nonzero factors are free coordinates).
  std::vector<Integer> generator_image(int g) const;
  bool torsion_free() const { return torsion.empty(); }
};

Abelianization abelianize(const GroupPresentation& pres);

/// Presentation of the kernel of a homomorphism onto Z_n.
struct CosetSchreierData {
  int index = 1;
  std::vector<Word> transversal;            ///< coset representative per residue
  GroupPresentation subgroup;
  /// For each subgroup generator, the (coset, parent generator) Schreier pair.
  std::vector<std::pair<int, int>> schreier_pairs;
  int parent_generators = 0;
  int parent_relators = 0;
};

/// Reidemeister-Schreier rewriting for hom: generators -> Z_n (values taken
/// mod n). Uses the transversal {x^i} when some generator x maps to a unit,
/// otherwise a breadth-first Schreier transversal. Generators labelling
/// transversal edges are trivial and omitted, so the subgroup has
/// n*(g-1)+1 generators and n*r relators. Throws ArgumentError when hom is
/// not onto Z_n, naming the image subgroup.
CosetSchreierData reidemeister_schreier(const GroupPresentation& pres, std::span<const std::int64_t> hom, int n);

/// Tietze simplification: drops trivial and repeated relators and eliminates
/// generators that occur exactly once in some relator, while relator lengths
/// stay below max_length. The result presents the same group.
GroupPresentation simplify_presentation(const GroupPresentation& pres, std::size_t max_length = 400);

}  // namespace arrtop
