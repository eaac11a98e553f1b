#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "socent/truss.hpp"

using namespace socent;
using namespace socent::testing;

namespace {

WeightedGraph k4_plus_pendant() {
  // K4 on 0..3 plus pendant node 4 attached to 0
  return make_graph(5, {{0, 1, 1},
                        {0, 2, 1},
                        {0, 3, 1},
                        {1, 2, 1},
                        {1, 3, 1},
                        {2, 3, 1},
                        {0, 4, 1}});
}

}  // namespace

TEST_CASE("edge support: K4, trees, and the brute-force oracle") {
  SUBCASE("every K4 edge has support 2") {
    auto g = complete_graph(4);
    for (auto s : edge_support(g)) CHECK(s == 2);
  }
  SUBCASE("tree edges have support 0") {
    auto g = make_graph(5, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {3, 4, 1}});
    for (auto s : edge_support(g)) CHECK(s == 0);
  }
  SUBCASE("random G(12, 0.4) matches triple enumeration") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      auto g = random_gnp(seed, 12, 0.4);
      CHECK(edge_support(g) == support_oracle(g));
    }
  }
  SUBCASE("threaded support equals serial") {
    auto g = random_gnp(42, 25, 0.4);
    CHECK(edge_support(g, 4) == edge_support(g, 1));
  }
}

TEST_CASE("k-truss decomposition on closed-form graphs") {
  SUBCASE("K5: every edge and node has trussness 5") {
    auto d = k_truss_decompose(complete_graph(5));
    for (int t : d.edge_truss) CHECK(t == 5);
    for (int t : d.node_truss) CHECK(t == 5);
    CHECK(d.max_level == 5);
  }
  SUBCASE("path: everything stays at level 2") {
    auto d = k_truss_decompose(make_graph(3, {{0, 1, 1}, {1, 2, 1}}));
    for (int t : d.edge_truss) CHECK(t == 2);
    for (int t : d.node_truss) CHECK(t == 2);
  }
  SUBCASE("K4 plus pendant") {
    auto g = k4_plus_pendant();
    auto d = k_truss_decompose(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edges()[e];
      if (edge.v == 4)
        CHECK(d.edge_truss[e] == 2);
      else
        CHECK(d.edge_truss[e] == 4);
    }
    CHECK(d.node_truss[0] == 4);
    CHECK(d.node_truss[4] == 2);
  }
  SUBCASE("isolated nodes get the tau = 0 sentinel") {
    auto d = k_truss_decompose(make_graph(3, {{0, 1, 1}}));
    CHECK(d.node_truss[2] == 0);
  }
  SUBCASE("nested cliques peel into distinct levels") {
    // K6 sharing node 0 with a triangle, plus a dangling edge
    std::vector<WeightedEdge> edges;
    for (unsigned i = 0; i < 6; ++i)
      for (unsigned j = i + 1; j < 6; ++j) edges.push_back({i, j, 1});
    edges.push_back({0, 6, 1});
    edges.push_back({0, 7, 1});
    edges.push_back({6, 7, 1});
    edges.push_back({7, 8, 1});
    auto d = k_truss_decompose(make_graph(9, edges));
    CHECK(d.max_level == 6);
    CHECK(d.node_truss[0] == 6);
    CHECK(d.node_truss[6] == 3);
    CHECK(d.node_truss[8] == 2);
  }
}

TEST_CASE("peeling equals the fixed-point oracle on random graphs") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    for (double p : {0.2, 0.4, 0.6}) {
      auto g = random_gnp(seed * 31 + static_cast<int>(p * 10), 5 + seed * 2,
                          p);
      auto d = k_truss_decompose(g);
      CHECK(d.edge_truss == truss_oracle(g));
      ++checked;
    }
  }
  CHECK(checked == 36);
}

TEST_CASE("monotone nesting and maximality of truss levels") {
  auto g = random_gnp(99, 24, 0.45);
  auto d = k_truss_decompose(g);
  for (int k = 3; k <= d.max_level; ++k) {
    std::set<EdgeId> level_k, level_k1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (d.edge_truss[e] >= k) level_k.insert(e);
      if (d.edge_truss[e] >= k + 1) level_k1.insert(e);
    }
    // nesting
    for (EdgeId e : level_k1) CHECK(level_k.count(e) == 1);
    // maximality: within the k-level subgraph every edge closes >= k-2
    // triangles of that subgraph
    for (EdgeId e : level_k) {
      const auto& edge = g.edges()[e];
      int triangles = 0;
      for (const auto& nb : g.neighbors(edge.u)) {
        if (!level_k.count(nb.edge)) continue;
        auto other = g.edge_id(edge.v, nb.node);
        if (other && level_k.count(*other)) ++triangles;
      }
      CHECK(triangles >= k - 2);
    }
  }
}

TEST_CASE("node trussness satisfies the max-over-incident-edges rule") {
  for (std::uint64_t seed : {3u, 17u}) {
    auto g = random_gnp(seed, 20, 0.3);
    auto d = k_truss_decompose(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      int expect = 0;
      bool attained = false;
      for (const auto& nb : g.neighbors(v)) {
        expect = std::max(expect, d.edge_truss[nb.edge]);
      }
      for (const auto& nb : g.neighbors(v)) {
        CHECK(d.edge_truss[nb.edge] <= expect);
        if (d.edge_truss[nb.edge] == expect) attained = true;
      }
      CHECK(d.node_truss[v] == expect);
      if (!g.neighbors(v).empty()) CHECK(attained);
    }
  }
}

TEST_CASE("hierarchy levels partition V in ascending order") {
  SUBCASE("K5 collapses to one level") {
    auto h = hierarchy_levels(k_truss_decompose(complete_graph(5)));
    REQUIRE(h.levels.size() == 1);
    CHECK(h.levels[0].value == 5);
    CHECK(h.levels[0].nodes.size() == 5);
  }
  SUBCASE("K4 plus pendant splits into levels 2 and 4") {
    auto h = hierarchy_levels(k_truss_decompose(k4_plus_pendant()));
    REQUIRE(h.levels.size() == 2);
    CHECK(h.levels[0].value == 2);
    CHECK(h.levels[0].nodes == std::vector<NodeId>{4});
    CHECK(h.levels[1].value == 4);
    CHECK(h.levels[1].nodes.size() == 4);
  }
  SUBCASE("levels are disjoint and cover V") {
    auto g = random_gnp(23, 18, 0.35);
    auto h = hierarchy_levels(k_truss_decompose(g));
    std::set<NodeId> all;
    int prev = -1;
    for (const auto& lvl : h.levels) {
      CHECK(lvl.value > prev);
      prev = lvl.value;
      for (NodeId v : lvl.nodes) CHECK(all.insert(v).second);
    }
    CHECK(all.size() == g.node_count());
  }
}

TEST_CASE("intra-community classification") {
  SUBCASE("K3: every pair is intra") {
    auto g = complete_graph(3);
    auto d = k_truss_decompose(g);
    CHECK(is_intra_community(g, d, 0, 1));
    CHECK(is_intra_community(g, d, 1, 2));
  }
  SUBCASE("pendant tie is inter") {
    auto g = k4_plus_pendant();
    auto d = k_truss_decompose(g);
    CHECK_FALSE(is_intra_community(g, d, 0, 4));
    CHECK(is_intra_community(g, d, 0, 1));
  }
  SUBCASE("non-edges are never intra") {
    auto g = make_graph(3, {{0, 1, 1}});
    auto d = k_truss_decompose(g);
    CHECK_FALSE(is_intra_community(g, d, 0, 2));
  }
  SUBCASE("errors: equal ids and out-of-range ids") {
    auto g = complete_graph(3);
    auto d = k_truss_decompose(g);
    CHECK_THROWS_AS(is_intra_community(g, d, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_intra_community(g, d, 0, 9), std::out_of_range);
  }
  SUBCASE("symmetry on random graphs") {
    auto g = random_gnp(7, 16, 0.4);
    auto d = k_truss_decompose(g);
    for (NodeId i = 0; i < g.node_count(); ++i)
      for (NodeId j = 0; j < g.node_count(); ++j)
        if (i != j)
          CHECK(is_intra_community(g, d, i, j) ==
                is_intra_community(g, d, j, i));
  }
}

TEST_CASE("trussness ignores weights entirely") {
  auto g = random_gnp(55, 22, 0.4);
  auto d1 = k_truss_decompose(g);
  auto d2 = k_truss_decompose(scale_weights(g, 17.25));
  CHECK(d1.edge_truss == d2.edge_truss);
  CHECK(d1.node_truss == d2.node_truss);
  CHECK(d1.max_level == d2.max_level);
}

TEST_CASE("decomposition of an edgeless graph") {
  auto d = k_truss_decompose(make_graph(4, {}));
  CHECK(d.max_level == 0);
  for (int t : d.node_truss) CHECK(t == 0);
}
