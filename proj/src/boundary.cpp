#include "arrtop/boundary.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "arrtop/errors.hpp"

namespace arrtop {

namespace {

std::vector<std::vector<int>> adjacency(const IncidenceGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (auto [h, f] : g.edges) {
    adj[static_cast<std::size_t>(h)].push_back(g.num_lines + f);
    adj[static_cast<std::size_t>(g.num_lines + f)].push_back(h);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace

IncidenceGraph build_graph(const IntersectionLattice& lat) {
  IncidenceGraph g;
  g.num_lines = lat.n;
  g.num_points = static_cast<int>(lat.flats.size());
  for (int f = 0; f < g.num_points; ++f)
    for (int h : lat.flats[static_cast<std::size_t>(f)].lines) g.edges.emplace_back(h, f);
  std::sort(g.edges.begin(), g.edges.end());
  const auto adj = adjacency(g);
  std::vector<char> seen(adj.size(), 0);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    ++g.components;
    std::deque<int> queue{static_cast<int>(s)};
    seen[s] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
    }
  }
  return g;
}

int b1_boundary_U(const IncidenceGraph& g) {
  if (!g.connected())
    throw ValidationError("incidence graph has " + std::to_string(g.components) +
                          " components; the boundary formula needs a connected graph");
  return g.num_lines - 1 + g.b1();
}

BoundaryCoverClassifier boundary_cover_classifier(const IncidenceGraph& g) {
  BoundaryCoverClassifier c;
  c.n = g.num_lines;
  c.meridian_values.assign(static_cast<std::size_t>(g.num_lines), 1);
  const auto adj = adjacency(g);
  std::set<std::pair<int, int>> tree;
  std::vector<char> seen(adj.size(), 0);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    std::deque<int> queue{static_cast<int>(s)};
    seen[s] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        tree.insert(v < g.num_lines ? std::pair{v, w - g.num_lines} : std::pair{w, v - g.num_lines});
        queue.push_back(w);
      }
    }
  }
  for (auto [h, f] : g.edges)
    if (!tree.count({h, f})) c.cycles.push_back({h, f});
  c.cycle_values.assign(c.cycles.size(), 0);
  return c;
}

CharPolyFactorization delta_boundary_F(const IntersectionLattice& lat) {
  CharPolyFactorization d;
  for (const auto& f : lat.flats) {
    const int m = f.multiplicity();
    d.multiply_cyclotomic(1, 1);
    d.multiply_t_power_minus_one(std::gcd(m, lat.n), m - 2);
  }
  return d;
}

}  // namespace arrtop
