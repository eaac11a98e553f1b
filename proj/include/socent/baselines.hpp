#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "socent/graph.hpp"

namespace socent {

enum class Orientation { HigherIsBetter, LowerIsBetter };

/// Per-node scores of one centrality measure. orientation declares how
/// scores translate into ranks (lower-is-better only for the network
/// constraint).
struct CentralityVector {
  std::string name;
  std::vector<double> scores;
  Orientation orientation = Orientation::HigherIsBetter;
};

/// How edge weights map to shortest-path lengths. Weights in the target
/// datasets are tie strengths, so the default treats a heavier edge as a
/// shorter one (length = 1/w); `Direct` uses the weight as the length.
enum class DistanceConvention { Reciprocal, Direct };

/// Thrown when power iteration fails to converge within its iteration cap
/// (near-degenerate dominant eigenvalues). Carries the number of
/// iterations performed.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(unsigned iterations, const std::string& what);
  unsigned iterations() const { return iterations_; }

 private:
  unsigned iterations_;
};

/// Degree centrality; weighted = node strength, unweighted = neighbor
/// count.
CentralityVector degree_centrality(const WeightedGraph& g,
                                   bool weighted = true);

/// Eigenvector centrality by power iteration on the weighted adjacency,
/// normalized to unit maximum entry. Converged when successive iterates
/// differ by less than tol in max-norm; otherwise throws ConvergenceError.
CentralityVector eigenvector_centrality(const WeightedGraph& g,
                                        double tol = 1e-10,
                                        unsigned max_iters = 10000,
                                        unsigned threads = 1);

/// Betweenness via Brandes accumulation over Dijkstra shortest paths.
/// Endpoints excluded; each unordered pair counted once. Deterministic
/// for any thread count.
CentralityVector betweenness_centrality(
    const WeightedGraph& g,
    DistanceConvention conv = DistanceConvention::Reciprocal,
    unsigned threads = 1);

/// Closeness restricted to each node's component: reachable count divided
/// by the sum of distances to reachable nodes; 0 for isolated nodes.
CentralityVector closeness_centrality(
    const WeightedGraph& g,
    DistanceConvention conv = DistanceConvention::Reciprocal,
    unsigned threads = 1);

/// Laplacian centrality: the drop in weighted Laplacian energy
/// E_L = sum_i x_i^2 + 2 sum_e w_e^2 when the node is removed, evaluated
/// in closed form per node.
CentralityVector laplacian_centrality(const WeightedGraph& g,
                                      unsigned threads = 1);

/// Burt's network constraint (lower is better). Nodes without edges get
/// +infinity so they rank last.
CentralityVector network_constraint(const WeightedGraph& g,
                                    unsigned threads = 1);

}  // namespace socent
