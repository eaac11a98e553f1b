#pragma once

#include <vector>

#include "socent/graph.hpp"
#include "socent/truss.hpp"

namespace socent {

/// Configuration for the social-centrality score.
///
/// alpha / delta are the per-node innate bonding and bridging potentials;
/// empty vectors mean the constant 1 for every node. The aggregate is
/// either the multiplicative form  psi = omega * (1 + beta) * (1 + gamma)
/// (default) or a weighted sum  psi = a*omega + b*beta + c*gamma.
struct SCConfig {
  enum class Aggregator { Multiplicative, WeightedSum };

  std::vector<double> alpha;  // empty = all 1
  std::vector<double> delta;  // empty = all 1
  Aggregator aggregator = Aggregator::Multiplicative;
  double coef_omega = 1.0;
  double coef_beta = 1.0;
  double coef_gamma = 1.0;
};

/// Per-node sociability, bonding, bridging, and aggregate score.
struct SCScores {
  std::vector<double> omega;
  std::vector<double> beta;
  std::vector<double> gamma;
  std::vector<double> psi;
};

/// Externally supplied community ids, one per node.
struct CommunityAssignment {
  std::vector<int> community;
};

/// Sociability: per-node sum of incident edge weights (node strength).
std::vector<double> sociability(const WeightedGraph& g, unsigned threads = 1);

/// Bonding potential: alpha_i plus, over intra-community neighbors j,
/// the neighbor sociability weighted by neighbor trussness
/// (sum of omega_j * tau_j).
std::vector<double> bonding(const WeightedGraph& g,
                            const TrussDecomposition& d, const SCConfig& cfg,
                            unsigned threads = 1);

/// Bridging potential: delta_i plus, over inter-community neighbors j,
/// the edge weight scaled by neighbor trussness (sum of w_ij * tau_j).
std::vector<double> bridging(const WeightedGraph& g,
                             const TrussDecomposition& d, const SCConfig& cfg,
                             unsigned threads = 1);

/// Full social-centrality computation with truss-based tie classification.
SCScores sc_score(const WeightedGraph& g, const TrussDecomposition& d,
                  const SCConfig& cfg = {}, unsigned threads = 1);

/// Variant that classifies ties by an external community assignment
/// instead of the trussness matrix. Node trussness still supplies the
/// hierarchy weights, so a decomposition is required. Throws
/// std::invalid_argument when the assignment does not cover every node.
SCScores sc_com_score(const WeightedGraph& g, const TrussDecomposition& d,
                      const CommunityAssignment& communities,
                      const SCConfig& cfg = {}, unsigned threads = 1);

/// Reads per-node innate potentials from CSV `label,alpha,delta` into cfg.
/// Unknown labels are skipped; returns the number skipped. Nodes absent
/// from the file keep the default 1.
std::size_t read_potentials(std::istream& in, const WeightedGraph& g,
                            SCConfig& cfg);

/// Reads a community assignment from CSV `label,communityId`. Every node
/// of the graph must be covered.
CommunityAssignment read_communities(std::istream& in, const WeightedGraph& g);

}  // namespace socent
