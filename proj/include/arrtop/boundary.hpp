#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/cyclotomic.hpp"

namespace arrtop {

/// Bipartite graph with a vertex per line (0..n-1), a vertex per flat
/// (n..n+F-1) and an edge (line, flat) for each incidence.
struct IncidenceGraph {
  int num_lines = 0;
  int num_points = 0;
  std::vector<std::pair<int, int>> edges;  ///< (line, flat index), sorted
  int components = 0;

  int vertex_count() const { return num_lines + num_points; }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool connected() const { return components == 1; }
  /// E - V + components.
  int b1() const { return edge_count() - vertex_count() + components; }
};

IncidenceGraph build_graph(const IntersectionLattice& lat);

/// (n - 1) + b_1(Gamma). Throws ValidationError for a disconnected graph.
int b1_boundary_U(const IncidenceGraph& g);

/// A cycle class y_c, named by the incidence edge left out of the spanning tree.
struct CycleGenerator {
  int line = -1;
  int flat = -1;
};

/// Images of the generators of H_1(boundary of U) under the cover map to Z_n:
/// meridians go to 1, cycle classes to 0.
struct BoundaryCoverClassifier {
  int n = 0;
  std::vector<int> meridian_values;  ///< per line
  std::vector<CycleGenerator> cycles;
  std::vector<int> cycle_values;
};

/// Spanning tree by breadth-first search from line 0, visiting neighbours in
/// increasing vertex order.
BoundaryCoverClassifier boundary_cover_classifier(const IncidenceGraph& g);

/// prod_X (t-1) (t^{gcd(|A_X|, n)} - 1)^{|A_X| - 2}.
CharPolyFactorization delta_boundary_F(const IntersectionLattice& lat);

/// H_1(boundary of F, Z) torsion is not determined here.
inline constexpr const char* kBoundaryTorsionNote = "not computed";

}  // namespace arrtop
