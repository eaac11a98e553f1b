#include "socent/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "socent/parallel.hpp"

namespace socent {

ConvergenceError::ConvergenceError(unsigned iterations,
                                   const std::string& what)
    : std::runtime_error(what), iterations_(iterations) {}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double edge_length(double w, DistanceConvention conv) {
  return conv == DistanceConvention::Reciprocal ? 1.0 / w : w;
}

// Relative tolerance for recognizing equal-length shortest paths.
bool same_distance(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

struct DijkstraState {
  std::vector<double> dist;
  std::vector<double> sigma;                  // shortest-path counts
  std::vector<std::vector<NodeId>> pred;      // tight predecessors
  std::vector<NodeId> settle_order;
  std::vector<char> settled;

  explicit DijkstraState(std::size_t n)
      : dist(n), sigma(n), pred(n), settled(n) {
    settle_order.reserve(n);
  }

  void reset(std::size_t n) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(settled.begin(), settled.end(), 0);
    for (auto& p : pred) p.clear();
    settle_order.clear();
    (void)n;
  }
};

void dijkstra(const WeightedGraph& g, NodeId source, DistanceConvention conv,
              DijkstraState& st, bool track_paths) {
  st.reset(g.node_count());
  st.dist[source] = 0.0;
  st.sigma[source] = 1.0;
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.emplace(0.0, source);
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (st.settled[u]) continue;
    st.settled[u] = 1;
    st.settle_order.push_back(u);
    for (const auto& nb : g.neighbors(u)) {
      const double nd = st.dist[u] + edge_length(nb.weight, conv);
      if (st.settled[nb.node]) continue;
      if (same_distance(nd, st.dist[nb.node])) {
        if (track_paths) {
          st.sigma[nb.node] += st.sigma[u];
          st.pred[nb.node].push_back(u);
        }
      } else if (nd < st.dist[nb.node]) {
        st.dist[nb.node] = nd;
        pq.emplace(nd, nb.node);
        if (track_paths) {
          st.sigma[nb.node] = st.sigma[u];
          st.pred[nb.node].assign(1, u);
        }
      }
    }
  }
}

}  // namespace

CentralityVector degree_centrality(const WeightedGraph& g, bool weighted) {
  CentralityVector cv;
  cv.name = weighted ? "dc" : "dc-unweighted";
  cv.scores.resize(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i)
    cv.scores[i] = weighted ? g.strength(i)
                            : static_cast<double>(g.degree(i));
  return cv;
}

CentralityVector eigenvector_centrality(const WeightedGraph& g, double tol,
                                        unsigned max_iters, unsigned threads) {
  const std::size_t n = g.node_count();
  CentralityVector cv;
  cv.name = "ec";
  cv.scores.assign(n, 0.0);
  if (n == 0 || g.edge_count() == 0) return cv;

  // Iterate on A + shift*I. The shift leaves the eigenvectors of A
  // untouched but makes the Perron eigenvalue strictly dominant, so the
  // iteration also settles on bipartite graphs (plain adjacency iteration
  // oscillates there, its two extreme eigenvalues having equal magnitude).
  // Chosen proportional to the matrix scale, it keeps the vector exactly
  // invariant under uniform weight scaling.
  double shift = 0.0;
  for (NodeId i = 0; i < n; ++i) shift = std::max(shift, g.strength(i));

  std::vector<double> x(n, 1.0), y(n, 0.0);
  for (unsigned iter = 1; iter <= max_iters; ++iter) {
    parallel_for(0, n, threads, [&](std::uint64_t i) {
      double acc = shift * x[i];
      for (const auto& nb : g.neighbors(static_cast<NodeId>(i)))
        acc += nb.weight * x[nb.node];
      y[i] = acc;
    });
    double mx = 0.0;
    for (double v : y) mx = std::max(mx, v);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] /= mx;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    x.swap(y);
    if (diff < tol) {
      cv.scores = std::move(x);
      return cv;
    }
  }
  throw ConvergenceError(
      max_iters, "eigenvector centrality did not converge after " +
                     std::to_string(max_iters) + " iterations");
}

CentralityVector betweenness_centrality(const WeightedGraph& g,
                                        DistanceConvention conv,
                                        unsigned threads) {
  const std::size_t n = g.node_count();
  CentralityVector cv;
  cv.name = "bc";
  cv.scores.assign(n, 0.0);
  if (n == 0) return cv;
  threads = resolve_threads(threads);

  // Sources are processed in blocks: workers fill per-source dependency
  // buffers, then a single pass folds them into the totals in ascending
  // source order, so scores are bit-identical for any thread count.
  std::size_t block = std::max<std::size_t>(
      threads, std::min<std::size_t>(256, (64u << 20) / (8 * n) + 1));
  block = std::min(block, n);
  std::vector<std::vector<double>> delta_buf(
      block, std::vector<double>(n, 0.0));

  for (std::size_t base = 0; base < n; base += block) {
    const std::size_t hi = std::min(base + block, n);
    parallel_for(base, hi, threads, [&](std::uint64_t s) {
      auto& delta = delta_buf[s - base];
      std::fill(delta.begin(), delta.end(), 0.0);
      DijkstraState st(n);
      dijkstra(g, static_cast<NodeId>(s), conv, st, true);
      for (auto it = st.settle_order.rbegin(); it != st.settle_order.rend();
           ++it) {
        NodeId w = *it;
        for (NodeId v : st.pred[w])
          delta[v] += st.sigma[v] / st.sigma[w] * (1.0 + delta[w]);
      }
      delta[s] = 0.0;  // endpoints excluded
    });
    for (std::size_t s = base; s < hi; ++s) {
      const auto& delta = delta_buf[s - base];
      for (std::size_t v = 0; v < n; ++v) cv.scores[v] += delta[v];
    }
  }
  for (double& v : cv.scores) v *= 0.5;  // each unordered pair once
  return cv;
}

CentralityVector closeness_centrality(const WeightedGraph& g,
                                      DistanceConvention conv,
                                      unsigned threads) {
  const std::size_t n = g.node_count();
  CentralityVector cv;
  cv.name = "cc";
  cv.scores.assign(n, 0.0);
  parallel_for(0, n, threads, [&](std::uint64_t s) {
    DijkstraState st(n);
    dijkstra(g, static_cast<NodeId>(s), conv, st, false);
    double sum = 0.0;
    std::size_t reachable = 0;
    for (NodeId u : st.settle_order) {
      if (u == s) continue;
      sum += st.dist[u];
      ++reachable;
    }
    cv.scores[s] =
        reachable == 0 ? 0.0 : static_cast<double>(reachable) / sum;
  });
  return cv;
}

CentralityVector laplacian_centrality(const WeightedGraph& g,
                                      unsigned threads) {
  const std::size_t n = g.node_count();
  CentralityVector cv;
  cv.name = "lc";
  cv.scores.assign(n, 0.0);
  std::vector<double> strength(n);
  for (NodeId i = 0; i < n; ++i) strength[i] = g.strength(i);
  parallel_for(0, n, threads, [&](std::uint64_t v) {
    double lc = strength[v] * strength[v];
    for (const auto& nb : g.neighbors(static_cast<NodeId>(v))) {
      const double w = nb.weight;
      lc += 2.0 * strength[nb.node] * w - w * w;  // neighbor energy drop
      lc += 2.0 * w * w;                          // removed edge terms
    }
    cv.scores[v] = lc;
  });
  return cv;
}

CentralityVector network_constraint(const WeightedGraph& g,
                                    unsigned threads) {
  const std::size_t n = g.node_count();
  CentralityVector cv;
  cv.name = "nc";
  cv.orientation = Orientation::LowerIsBetter;
  cv.scores.assign(n, 0.0);
  std::vector<double> strength(n);
  for (NodeId i = 0; i < n; ++i) strength[i] = g.strength(i);
  parallel_for(0, n, threads, [&](std::uint64_t i) {
    auto nbrs = g.neighbors(static_cast<NodeId>(i));
    if (nbrs.empty()) {
      cv.scores[i] = kInf;  // no ties: constraint undefined, ranks last
      return;
    }
    const double wi = strength[i];
    double total = 0.0;
    for (const auto& nj : nbrs) {
      double indirect = 0.0;
      for (const auto& nq : nbrs) {
        if (nq.node == nj.node) continue;
        const double wqj = g.weight(nq.node, nj.node);
        if (wqj == 0.0) continue;
        indirect += (nq.weight / wi) * (wqj / strength[nq.node]);
      }
      const double c = nj.weight / wi + indirect;
      total += c * c;
    }
    cv.scores[i] = total;
  });
  return cv;
}

}  // namespace socent
