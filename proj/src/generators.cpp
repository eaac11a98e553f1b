#include "socent/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace socent {

namespace {

std::uint64_t pair_key(std::uint64_t a, std::uint64_t b) {
  if (a > b) std::swap(a, b);
  return (a << 32) | b;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

GraphBuilder builder_with_nodes(std::uint64_t n) {
  GraphBuilder b;
  for (std::uint64_t i = 0; i < n; ++i) b.intern(std::to_string(i));
  return b;
}

WeightedGraph generate_er(const GeneratorSpec& spec) {
  const std::uint64_t n = spec.n;
  const std::uint64_t max_edges = n * (n - 1) / 2;
  if (spec.er_edges > max_edges)
    throw std::invalid_argument("ER edge count " +
                                std::to_string(spec.er_edges) +
                                " exceeds n(n-1)/2 = " +
                                std::to_string(max_edges));
  SplitMix64 rng(spec.seed);
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(spec.er_edges * 2);
  GraphBuilder b = builder_with_nodes(n);
  while (picked.size() < spec.er_edges) {
    const auto u = static_cast<NodeId>(rng.below(n));
    const auto v = static_cast<NodeId>(rng.below(n));
    if (u == v) continue;
    if (!picked.insert(pair_key(u, v)).second) continue;
    b.add_edge(u, v, 1.0);
  }
  return std::move(b).build();
}

WeightedGraph generate_ws(const GeneratorSpec& spec) {
  const std::uint64_t n = spec.n;
  const unsigned nei = spec.ws_neighbors;
  check_probability(spec.ws_rewire_p, "rewire probability");
  if (nei == 0) throw std::invalid_argument("WS needs nei >= 1");
  if (n <= 2ull * nei)
    throw std::invalid_argument("WS ring needs n > 2*nei");
  SplitMix64 rng(spec.seed);

  // Lattice edges in (i, offset) order; rewiring keeps the original edge
  // when the proposed target would be a self-loop or a duplicate, so the
  // edge count stays exactly n * nei.
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n * nei);
  std::unordered_set<std::uint64_t> present;
  present.reserve(n * nei * 2);
  for (std::uint64_t i = 0; i < n; ++i)
    for (unsigned j = 1; j <= nei; ++j) {
      const auto u = static_cast<NodeId>(i);
      const auto v = static_cast<NodeId>((i + j) % n);
      edges.emplace_back(u, v);
      present.insert(pair_key(u, v));
    }
  for (auto& [u, v] : edges) {
    if (rng.uniform() >= spec.ws_rewire_p) continue;
    const auto t = static_cast<NodeId>(rng.below(n));
    if (t == u || t == v) continue;
    if (present.count(pair_key(u, t))) continue;
    present.erase(pair_key(u, v));
    present.insert(pair_key(u, t));
    v = t;
  }
  GraphBuilder b = builder_with_nodes(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v, 1.0);
  return std::move(b).build();
}

WeightedGraph generate_ff(const GeneratorSpec& spec) {
  const std::uint64_t n = spec.n;
  check_probability(spec.ff_forward_prob, "forward probability");
  if (spec.ff_backward_factor < 0.0)
    throw std::invalid_argument("backward factor must be >= 0");
  if (spec.ff_ambassadors == 0)
    throw std::invalid_argument("FF needs ambs >= 1");
  SplitMix64 rng(spec.seed);
  const double fw = spec.ff_forward_prob;
  const double bw = std::min(1.0, fw * spec.ff_backward_factor);

  std::vector<std::vector<NodeId>> adj(n);
  std::vector<std::uint32_t> visited_stamp(n, 0);
  std::uint32_t stamp = 0;
  std::vector<NodeId> burned, frontier, candidates;

  for (std::uint64_t v = 1; v < n; ++v) {
    ++stamp;
    burned.clear();
    frontier.clear();
    const std::uint64_t k = std::min<std::uint64_t>(spec.ff_ambassadors, v);
    while (burned.size() < k) {
      const auto a = static_cast<NodeId>(rng.below(v));
      if (visited_stamp[a] == stamp) continue;
      visited_stamp[a] = stamp;
      burned.push_back(a);
      frontier.push_back(a);
    }
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const NodeId u = frontier[f];
      std::uint64_t want = rng.geometric(fw) + rng.geometric(bw);
      if (want == 0) continue;
      candidates.clear();
      for (NodeId nb : adj[u])
        if (visited_stamp[nb] != stamp) candidates.push_back(nb);
      // burn `want` of them, chosen uniformly without replacement
      for (std::uint64_t picked = 0;
           picked < want && !candidates.empty(); ++picked) {
        const std::uint64_t idx = rng.below(candidates.size());
        const NodeId nb = candidates[idx];
        candidates[idx] = candidates.back();
        candidates.pop_back();
        visited_stamp[nb] = stamp;
        burned.push_back(nb);
        frontier.push_back(nb);
      }
    }
    for (NodeId u : burned) {
      adj[u].push_back(static_cast<NodeId>(v));
      adj[v].push_back(u);
    }
  }

  GraphBuilder b = builder_with_nodes(n);
  for (std::uint64_t u = 0; u < n; ++u)
    for (NodeId w : adj[u])
      if (u < w) b.add_edge(static_cast<NodeId>(u), w, 1.0);
  return std::move(b).build();
}

}  // namespace

WeightedGraph generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  switch (spec.model) {
    case GeneratorSpec::Model::ER:
      return generate_er(spec);
    case GeneratorSpec::Model::WS:
      return generate_ws(spec);
    case GeneratorSpec::Model::FF:
      return generate_ff(spec);
  }
  throw std::invalid_argument("unknown generator model");
}

const char* generator_rng_name() { return "splitmix64"; }

}  // namespace socent
