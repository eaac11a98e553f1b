#pragma once

#include <cstdint>
#include <vector>

#include "socent/graph.hpp"

namespace socent {

/// Result of a k-truss decomposition.
///
/// edge_truss[e] is the largest k such that edge e belongs to the k-truss
/// (always >= 2: the 2-truss is the graph itself). node_truss[i] is the
/// maximum trussness over the edges incident to node i; isolated nodes get
/// the sentinel 0, below any real level. max_level is the largest edge
/// trussness (0 on an edgeless graph).
///
/// Trussness is purely combinatorial: edge weights play no role.
struct TrussDecomposition {
  std::vector<int> edge_truss;  // by EdgeId
  std::vector<int> node_truss;  // by NodeId
  int max_level = 0;
};

/// Support of every edge: the number of triangles that contain it,
/// computed by sorted-adjacency intersection.
std::vector<std::uint32_t> edge_support(const WeightedGraph& g,
                                        unsigned threads = 1);

/// Peels edges in ascending support order with a bucket queue; overall
/// O(m^1.5). Ties in support start in smallest-edge-id order; the final
/// trussness values are independent of processing order.
TrussDecomposition k_truss_decompose(const WeightedGraph& g,
                                     unsigned threads = 1);

/// Same, reusing a precomputed support vector (consumed).
TrussDecomposition k_truss_from_support(const WeightedGraph& g,
                                        std::vector<std::uint32_t> support);

/// Nodes grouped by node trussness, levels ascending. Levels partition V;
/// isolated nodes form the level with value 0 when present.
struct HierarchyPartition {
  struct Level {
    int value;                  // shared node trussness
    std::vector<NodeId> nodes;  // ascending id
  };
  std::vector<Level> levels;
};

HierarchyPartition hierarchy_levels(const TrussDecomposition& d);

/// Tie classifier: true iff edge (i, j) exists and both node trussnesses
/// equal the edge trussness. Symmetric; false for non-edges. Out-of-range
/// ids or i == j raise std::invalid_argument / std::out_of_range.
bool is_intra_community(const WeightedGraph& g, const TrussDecomposition& d,
                        NodeId i, NodeId j);

}  // namespace socent
