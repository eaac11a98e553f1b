#pragma once

#include <string>
#include <vector>

#include "socent/generators.hpp"
#include "socent/graph.hpp"

namespace socent::testing {

inline std::string node_label(unsigned i) { return "n" + std::to_string(i); }

struct WeightedEdge {
  unsigned u, v;
  double w;
};

// Graph from explicit numeric edges; interns labels n0..n<n-1> first so
// isolated nodes survive and ids are predictable.
inline WeightedGraph make_graph(unsigned n,
                                const std::vector<WeightedEdge>& edges) {
  GraphBuilder b;
  for (unsigned i = 0; i < n; ++i) b.intern(node_label(i));
  for (const auto& e : edges) b.add_edge(e.u, e.v, e.w);
  return std::move(b).build();
}

inline WeightedGraph complete_graph(unsigned n, double w = 1.0) {
  std::vector<WeightedEdge> edges;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) edges.push_back({i, j, w});
  return make_graph(n, edges);
}

// Seeded G(n, p); weights uniform in [0.5, 2) when weighted, else 1.
inline WeightedGraph random_gnp(std::uint64_t seed, unsigned n, double p,
                                bool weighted = true) {
  SplitMix64 rng(seed);
  std::vector<WeightedEdge> edges;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      if (rng.uniform() < p)
        edges.push_back({i, j, weighted ? 0.5 + 1.5 * rng.uniform() : 1.0});
  return make_graph(n, edges);
}

inline WeightedGraph scale_weights(const WeightedGraph& g, double c) {
  GraphBuilder b;
  for (NodeId i = 0; i < g.node_count(); ++i) b.intern(g.label(i));
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v, e.weight * c);
  return std::move(b).build();
}

inline bool is_connected(const WeightedGraph& g) {
  if (g.node_count() == 0) return true;
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(u))
      if (!seen[nb.node]) {
        seen[nb.node] = 1;
        ++visited;
        stack.push_back(nb.node);
      }
  }
  return visited == g.node_count();
}

}  // namespace socent::testing
