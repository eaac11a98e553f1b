#include "socent/truss.hpp"

#include <algorithm>
#include <map>

#include "socent/parallel.hpp"

namespace socent {

namespace {

// Looks up the edge toward `target` in the sorted neighbor span.
const Neighbor* find_neighbor(std::span<const Neighbor> nbrs, NodeId target) {
  auto it = std::lower_bound(
      nbrs.begin(), nbrs.end(), target,
      [](const Neighbor& nb, NodeId id) { return nb.node < id; });
  if (it == nbrs.end() || it->node != target) return nullptr;
  return &*it;
}

// Calls fn(e1, e2) for every triangle (u, v, w) of the edge (u, v), where
// e1 = (u, w) and e2 = (v, w). Scans the smaller adjacency list and binary
// searches the larger, skipping edges marked dead.
template <typename F>
void for_each_triangle(const WeightedGraph& g, NodeId u, NodeId v,
                       const std::vector<char>* dead, F&& fn) {
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  if (nv.size() < nu.size()) std::swap(nu, nv);
  for (const auto& nb : nu) {
    if (nb.node == v || nb.node == u) continue;
    if (dead && (*dead)[nb.edge]) continue;
    const Neighbor* other = find_neighbor(nv, nb.node);
    if (!other) continue;
    if (dead && (*dead)[other->edge]) continue;
    fn(nb.edge, other->edge);
  }
}

}  // namespace

std::vector<std::uint32_t> edge_support(const WeightedGraph& g,
                                        unsigned threads) {
  const auto& edges = g.edges();
  std::vector<std::uint32_t> support(edges.size(), 0);
  parallel_for(0, edges.size(), threads, [&](std::uint64_t eid) {
    std::uint32_t count = 0;
    for_each_triangle(g, edges[eid].u, edges[eid].v, nullptr,
                      [&](EdgeId, EdgeId) { ++count; });
    support[eid] = count;
  });
  return support;
}

TrussDecomposition k_truss_decompose(const WeightedGraph& g,
                                     unsigned threads) {
  return k_truss_from_support(g, edge_support(g, threads));
}

TrussDecomposition k_truss_from_support(const WeightedGraph& g,
                                        std::vector<std::uint32_t> support) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  TrussDecomposition d;
  d.edge_truss.assign(m, 2);
  d.node_truss.assign(g.node_count(), 0);
  if (m == 0) return d;

  // Bin-sorted peeling (Batagelj-Zaversnik layout adapted to supports).
  std::uint32_t max_sup = *std::max_element(support.begin(), support.end());
  std::vector<std::size_t> bin(max_sup + 2, 0);
  for (std::size_t e = 0; e < m; ++e) ++bin[support[e] + 1];
  for (std::size_t s = 1; s < bin.size(); ++s) bin[s] += bin[s - 1];
  std::vector<EdgeId> order(m);
  std::vector<std::size_t> pos(m);
  {
    std::vector<std::size_t> cursor(bin.begin(), bin.end() - 1);
    for (std::size_t e = 0; e < m; ++e) {  // stable: ties by edge id
      pos[e] = cursor[support[e]]++;
      order[pos[e]] = static_cast<EdgeId>(e);
    }
  }

  std::vector<char> dead(m, 0);
  std::uint32_t level = 0;  // running max of popped supports
  for (std::size_t i = 0; i < m; ++i) {
    EdgeId e = order[i];
    level = std::max(level, support[e]);
    d.edge_truss[e] = static_cast<int>(level) + 2;
    dead[e] = 1;
    for_each_triangle(
        g, edges[e].u, edges[e].v, &dead, [&](EdgeId e1, EdgeId e2) {
          for (EdgeId pe : {e1, e2}) {
            // Supports already at the current level cannot drop further:
            // those edges peel at this level anyway.
            if (support[pe] <= level) continue;
            std::uint32_t s = support[pe];
            std::size_t front = bin[s];
            EdgeId other = order[front];
            if (other != pe) {
              std::swap(order[front], order[pos[pe]]);
              std::swap(pos[other], pos[pe]);
            }
            ++bin[s];
            --support[pe];
          }
        });
  }

  for (std::size_t e = 0; e < m; ++e) {
    d.node_truss[edges[e].u] =
        std::max(d.node_truss[edges[e].u], d.edge_truss[e]);
    d.node_truss[edges[e].v] =
        std::max(d.node_truss[edges[e].v], d.edge_truss[e]);
    d.max_level = std::max(d.max_level, d.edge_truss[e]);
  }
  return d;
}

HierarchyPartition hierarchy_levels(const TrussDecomposition& d) {
  std::map<int, std::vector<NodeId>> groups;
  for (NodeId i = 0; i < static_cast<NodeId>(d.node_truss.size()); ++i)
    groups[d.node_truss[i]].push_back(i);
  HierarchyPartition h;
  h.levels.reserve(groups.size());
  for (auto& [value, nodes] : groups)
    h.levels.push_back({value, std::move(nodes)});
  return h;
}

bool is_intra_community(const WeightedGraph& g, const TrussDecomposition& d,
                        NodeId i, NodeId j) {
  if (i == j) throw std::invalid_argument("tie classification needs i != j");
  auto eid = g.edge_id(i, j);  // bounds-checked
  if (!eid) return false;
  return d.node_truss[i] == d.node_truss[j] &&
         d.node_truss[i] == d.edge_truss[*eid];
}

}  // namespace socent
