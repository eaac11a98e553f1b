#include "socent/social_centrality.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <istream>
#include <sstream>

#include "socent/parallel.hpp"

namespace socent {

namespace {

void validate_potentials(const std::vector<double>& v, std::size_t n,
                         const char* name) {
  if (!v.empty() && v.size() != n)
    throw std::invalid_argument(std::string(name) +
                                " must cover every node or be empty");
  for (double x : v)
    if (x < 0.0)
      throw std::invalid_argument(std::string(name) + " must be >= 0");
}

void validate_config(const SCConfig& cfg, std::size_t n) {
  validate_potentials(cfg.alpha, n, "alpha");
  validate_potentials(cfg.delta, n, "delta");
  if (cfg.coef_omega < 0 || cfg.coef_beta < 0 || cfg.coef_gamma < 0)
    throw std::invalid_argument("aggregator coefficients must be >= 0");
}

double at_or(const std::vector<double>& v, std::size_t i, double fallback) {
  return v.empty() ? fallback : v[i];
}

// Shared body of the truss-based and community-based variants; intra(i, nb)
// decides whether the edge to nb bonds or bridges. Neighbor sums run in
// ascending neighbor id so output is bit-stable for any thread count.
template <typename IntraFn>
SCScores score_with(const WeightedGraph& g, const TrussDecomposition& d,
                    const SCConfig& cfg, unsigned threads, IntraFn intra) {
  const std::size_t n = g.node_count();
  validate_config(cfg, n);
  if (d.node_truss.size() != n)
    throw std::invalid_argument("decomposition does not match graph");

  SCScores s;
  s.omega = sociability(g, threads);
  s.beta.assign(n, 0.0);
  s.gamma.assign(n, 0.0);
  s.psi.assign(n, 0.0);
  parallel_for(0, n, threads, [&](std::uint64_t i) {
    double bond = at_or(cfg.alpha, i, 1.0);
    double bridge = at_or(cfg.delta, i, 1.0);
    for (const auto& nb : g.neighbors(static_cast<NodeId>(i))) {
      double tau = static_cast<double>(d.node_truss[nb.node]);
      if (intra(static_cast<NodeId>(i), nb))
        bond += s.omega[nb.node] * tau;
      else
        bridge += nb.weight * tau;
    }
    s.beta[i] = bond;
    s.gamma[i] = bridge;
    if (cfg.aggregator == SCConfig::Aggregator::Multiplicative)
      s.psi[i] = s.omega[i] * (1.0 + bond) * (1.0 + bridge);
    else
      s.psi[i] = cfg.coef_omega * s.omega[i] + cfg.coef_beta * bond +
                 cfg.coef_gamma * bridge;
  });
  return s;
}

}  // namespace

std::vector<double> sociability(const WeightedGraph& g, unsigned threads) {
  std::vector<double> omega(g.node_count(), 0.0);
  parallel_for(0, g.node_count(), threads, [&](std::uint64_t i) {
    omega[i] = g.strength(static_cast<NodeId>(i));
  });
  return omega;
}

std::vector<double> bonding(const WeightedGraph& g,
                            const TrussDecomposition& d, const SCConfig& cfg,
                            unsigned threads) {
  return sc_score(g, d, cfg, threads).beta;
}

std::vector<double> bridging(const WeightedGraph& g,
                             const TrussDecomposition& d, const SCConfig& cfg,
                             unsigned threads) {
  return sc_score(g, d, cfg, threads).gamma;
}

SCScores sc_score(const WeightedGraph& g, const TrussDecomposition& d,
                  const SCConfig& cfg, unsigned threads) {
  return score_with(g, d, cfg, threads, [&](NodeId i, const Neighbor& nb) {
    return d.node_truss[i] == d.node_truss[nb.node] &&
           d.node_truss[i] == d.edge_truss[nb.edge];
  });
}

SCScores sc_com_score(const WeightedGraph& g, const TrussDecomposition& d,
                      const CommunityAssignment& communities,
                      const SCConfig& cfg, unsigned threads) {
  if (communities.community.size() != g.node_count())
    throw std::invalid_argument(
        "community assignment must cover every node (" +
        std::to_string(communities.community.size()) + " of " +
        std::to_string(g.node_count()) + " given)");
  const auto& com = communities.community;
  return score_with(g, d, cfg, threads, [&](NodeId i, const Neighbor& nb) {
    return com[i] == com[nb.node];
  });
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim_view(s);
  if (s.empty()) return false;
  char* end = nullptr;
  std::string buf(s);
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

}  // namespace

std::size_t read_potentials(std::istream& in, const WeightedGraph& g,
                            SCConfig& cfg) {
  cfg.alpha.assign(g.node_count(), 1.0);
  cfg.delta.assign(g.node_count(), 1.0);
  std::size_t skipped = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv(line);
    if (fields.size() != 3)
      throw IngestError(line_no, "expected 'label,alpha,delta'");
    double a, d;
    if (!parse_double(fields[1], a) || !parse_double(fields[2], d)) {
      if (line_no == 1) continue;  // header row
      throw IngestError(line_no, "bad potential value");
    }
    auto node = g.find(fields[0]);
    if (!node) {
      ++skipped;
      continue;
    }
    cfg.alpha[*node] = a;
    cfg.delta[*node] = d;
  }
  return skipped;
}

CommunityAssignment read_communities(std::istream& in,
                                     const WeightedGraph& g) {
  CommunityAssignment out;
  out.community.assign(g.node_count(), -1);
  std::vector<char> seen(g.node_count(), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv(line);
    if (fields.size() != 2)
      throw IngestError(line_no, "expected 'label,communityId'");
    double c;
    if (!parse_double(fields[1], c)) {
      if (line_no == 1) continue;  // header row
      throw IngestError(line_no, "bad community id");
    }
    auto node = g.find(fields[0]);
    if (!node) continue;  // roster may exceed the graph
    out.community[*node] = static_cast<int>(c);
    seen[*node] = 1;
  }
  for (NodeId i = 0; i < g.node_count(); ++i)
    if (!seen[i])
      throw std::invalid_argument("node '" + g.label(i) +
                                  "' has no community id");
  return out;
}

}  // namespace socent
