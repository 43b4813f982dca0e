#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "rotsync/view_graph.hpp"

using namespace rotsync;

namespace {

ViewGraph MakeGraph(int n, const std::vector<std::pair<int, int>>& pairs) {
  ViewGraph g(n);
  for (const auto& [i, j] : pairs) g.AddEdge(i, j, Rotation::Identity());
  return g;
}

// Independent union-find, oracle for connectivity and Kruskal.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int Find(int x) { return parent[x] == x ? x : parent[x] = Find(parent[x]); }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

double KruskalWeight(const ViewGraph& g, const EdgeScalarMap& w) {
  std::vector<int> order(g.NumEdges());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  UnionFind uf(g.NumNodes());
  double total = 0.0;
  for (int e : order) {
    if (uf.Union(g.Edge(e).i, g.Edge(e).j)) total += w[e];
  }
  return total;
}

}  // namespace

TEST_CASE("graph container invariants") {
  ViewGraph g(4);
  g.AddEdge(2, 0, so3::ExpMap({0.1, 0.2, 0.3}));
  CHECK(g.Edge(0).i == 0);
  CHECK(g.Edge(0).j == 2);
  // Reverse orientation is the transpose.
  CHECK((g.OrientedMeasurement(0, 2, 0) - g.Edge(0).rot.transpose()).norm() == 0.0);
  CHECK(g.EdgeId(0, 2) == 0);
  CHECK(g.EdgeId(2, 0) == 0);
  CHECK(g.EdgeId(1, 3) == -1);
  CHECK_THROWS_AS(g.AddEdge(1, 1, Rotation::Identity()), std::invalid_argument);
  CHECK_THROWS_AS(g.AddEdge(0, 2, Rotation::Identity()), std::invalid_argument);
  CHECK_THROWS_AS(g.AddEdge(0, 4, Rotation::Identity()), std::invalid_argument);
}

TEST_CASE("Erdos-Renyi generation") {
  Rng rng(3);
  CHECK(ErdosRenyi(10, 0.0, rng).empty());
  CHECK(ErdosRenyi(10, 1.0, rng).size() == 45);

  const auto edges = ErdosRenyi(200, 0.5, rng);
  const double pairs = 200.0 * 199.0 / 2.0;
  const double mean = pairs * 0.5;
  const double sd = std::sqrt(pairs * 0.25);
  CHECK(std::abs(static_cast<double>(edges.size()) - mean) < 4.0 * sd);

  // Fixed seed is reproducible.
  Rng a(9), b(9);
  CHECK(ErdosRenyi(30, 0.3, a) == ErdosRenyi(30, 0.3, b));
}

TEST_CASE("cycle sampling") {
  SUBCASE("triangle has a unique common neighbor") {
    const ViewGraph g = MakeGraph(3, {{0, 1}, {0, 2}, {1, 2}});
    const CycleTable table = SampleCycles(g, 10, Rng(1));
    for (int e = 0; e < 3; ++e) {
      REQUIRE(table.per_edge[e].third_vertex.size() == 10);
      const int expected = 3 - g.Edge(e).i - g.Edge(e).j;
      for (int k : table.per_edge[e].third_vertex) CHECK(k == expected);
    }
  }
  SUBCASE("path graph is cycle-free") {
    const ViewGraph g = MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}});
    const CycleTable table = SampleCycles(g, 50, Rng(1));
    for (int e = 0; e < 3; ++e) CHECK(table.CycleFree(e));
  }
  SUBCASE("uniform over common neighbors on the complete graph") {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 10; ++i) {
      for (int j = i + 1; j < 10; ++j) pairs.emplace_back(i, j);
    }
    const ViewGraph g = MakeGraph(10, pairs);
    std::map<int, int> counts;
    int total = 0;
    // Aggregate over many draws of edge (0, 1); common neighbors are 2..9.
    for (uint64_t seed = 0; seed < 50; ++seed) {
      const CycleTable table = SampleCycles(g, 2000, Rng(seed));
      for (int k : table.per_edge[g.EdgeId(0, 1)].third_vertex) {
        ++counts[k];
        ++total;
      }
    }
    for (int k = 2; k < 10; ++k) {
      CHECK(std::abs(counts[k] / static_cast<double>(total) - 0.125) < 0.02 * 0.125 * 8);
    }
  }
  SUBCASE("samples are always common neighbors") {
    Rng rng(5);
    const auto pairs = ErdosRenyi(30, 0.3, rng);
    const ViewGraph g = MakeGraph(30, pairs);
    const CycleTable table = SampleCycles(g, 50, Rng(6));
    for (int e = 0; e < g.NumEdges(); ++e) {
      const auto& entry = table.per_edge[e];
      for (size_t t = 0; t < entry.third_vertex.size(); ++t) {
        const int k = entry.third_vertex[t];
        CHECK(g.EdgeId(g.Edge(e).i, k) == entry.leg_ik[t]);
        CHECK(g.EdgeId(g.Edge(e).j, k) == entry.leg_jk[t]);
      }
    }
  }
}

TEST_CASE("connectivity") {
  std::vector<std::pair<int, int>> complete;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) complete.emplace_back(i, j);
  }
  CHECK(IsConnected(MakeGraph(6, complete)));
  CHECK_FALSE(IsConnected(
      MakeGraph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})));

  // Against a union-find oracle on random graphs.
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto pairs = ErdosRenyi(40, 0.06, rng);
    const ViewGraph g = MakeGraph(40, pairs);
    UnionFind uf(40);
    for (const auto& [i, j] : pairs) uf.Union(i, j);
    bool oracle = true;
    for (int v = 1; v < 40; ++v) oracle &= uf.Find(v) == uf.Find(0);
    CHECK(IsConnected(g) == oracle);
  }
}

TEST_CASE("Prim MST") {
  SUBCASE("tree input returns itself") {
    const ViewGraph g = MakeGraph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    const EdgeScalarMap w = {0.5, 0.1, 0.9, 0.4};
    const SpanningTree tree = PrimMst(g, w);
    std::vector<char> used(4, 0);
    for (int v = 0; v < 5; ++v) {
      if (v != tree.root) used[tree.parent_edge[v]] = 1;
    }
    for (int e = 0; e < 4; ++e) CHECK(used[e]);
  }
  SUBCASE("triangle keeps the two lightest edges") {
    const ViewGraph g = MakeGraph(3, {{0, 1}, {0, 2}, {1, 2}});
    const SpanningTree tree = PrimMst(g, {0.1, 0.2, 0.3});
    double total = 0.0;
    for (int v = 0; v < 3; ++v) {
      if (v != tree.root) total += EdgeScalarMap{0.1, 0.2, 0.3}[tree.parent_edge[v]];
    }
    CHECK(total == doctest::Approx(0.3));
  }
  SUBCASE("matches Kruskal on random graphs") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed + 100);
      const auto pairs = ErdosRenyi(12, 0.5, rng);
      const ViewGraph g = MakeGraph(12, pairs);
      if (!IsConnected(g)) continue;
      EdgeScalarMap w(g.NumEdges());
      for (double& x : w) x = rng.Uniform();
      const SpanningTree tree = PrimMst(g, w);
      double total = 0.0;
      for (int v = 0; v < 12; ++v) {
        if (v != tree.root) total += w[tree.parent_edge[v]];
      }
      CHECK(total == doctest::Approx(KruskalWeight(g, w)).epsilon(1e-12));
    }
  }
  SUBCASE("never beaten by random spanning trees") {
    Rng rng(7);
    const auto pairs = ErdosRenyi(15, 0.4, rng);
    const ViewGraph g = MakeGraph(15, pairs);
    REQUIRE(IsConnected(g));
    EdgeScalarMap w(g.NumEdges());
    for (double& x : w) x = rng.Uniform();
    const SpanningTree tree = PrimMst(g, w);
    double best = 0.0;
    for (int v = 0; v < 15; ++v) {
      if (v != tree.root) best += w[tree.parent_edge[v]];
    }
    for (int trial = 0; trial < 100; ++trial) {
      // Random spanning tree: Kruskal under random weights.
      EdgeScalarMap shuffle(g.NumEdges());
      for (double& x : shuffle) x = rng.Uniform();
      std::vector<int> order(g.NumEdges());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return shuffle[a] < shuffle[b]; });
      UnionFind uf(15);
      double total = 0.0;
      for (int e : order) {
        if (uf.Union(g.Edge(e).i, g.Edge(e).j)) total += w[e];
      }
      CHECK(best <= total + 1e-12);
    }
  }
  SUBCASE("disconnected graph throws") {
    const ViewGraph g = MakeGraph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(PrimMst(g, EdgeScalarMap(2, 1.0)), std::runtime_error);
  }
}
