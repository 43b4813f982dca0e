#include "rotsync/view_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace rotsync {

namespace {
int64_t PairKey(int i, int j) {
  return static_cast<int64_t>(i) << 32 | static_cast<uint32_t>(j);
}
}  // namespace

ViewGraph::ViewGraph(int num_nodes) : num_nodes_(num_nodes), adjacency_(num_nodes) {
  if (num_nodes < 1) throw std::invalid_argument("ViewGraph: need at least one node");
}

void ViewGraph::AddEdge(int i, int j, const Rotation& rot) {
  if (i == j) throw std::invalid_argument("ViewGraph: self-loop " + std::to_string(i));
  if (i < 0 || j < 0 || i >= num_nodes_ || j >= num_nodes_) {
    throw std::invalid_argument("ViewGraph: node index out of range");
  }
  Rotation r = rot;
  if (i > j) {
    std::swap(i, j);
    r.transposeInPlace();
  }
  if (edge_index_.count(PairKey(i, j))) {
    throw std::invalid_argument("ViewGraph: duplicate edge (" + std::to_string(i) +
                                ", " + std::to_string(j) + ")");
  }
  const int e = static_cast<int>(edges_.size());
  edges_.push_back({i, j, r});
  edge_index_.emplace(PairKey(i, j), e);
  adjacency_[i].emplace_back(j, e);
  adjacency_[j].emplace_back(i, e);
}

int ViewGraph::EdgeId(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto it = edge_index_.find(PairKey(i, j));
  return it == edge_index_.end() ? -1 : it->second;
}

Rotation ViewGraph::OrientedMeasurement(int e, int from, int to) const {
  const MeasuredEdge& edge = edges_[e];
  if (from == edge.i && to == edge.j) return edge.rot;
  if (from == edge.j && to == edge.i) return edge.rot.transpose();
  throw std::invalid_argument("OrientedMeasurement: nodes do not match edge");
}

std::vector<std::pair<int, int>> ErdosRenyi(int n, double p, Rng& rng) {
  if (n < 2) throw std::invalid_argument("ErdosRenyi: need n >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("ErdosRenyi: p outside [0, 1]");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.Bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

CycleTable SampleCycles(const ViewGraph& graph, int per_edge, const Rng& rng) {
  if (per_edge < 1) throw std::invalid_argument("SampleCycles: per_edge must be >= 1");
  CycleTable table;
  table.per_edge.resize(graph.NumEdges());
  // Common neighbors via sorted adjacency intersection.
  std::vector<std::vector<std::pair<int, int>>> sorted_adj(graph.NumNodes());
  for (int v = 0; v < graph.NumNodes(); ++v) {
    sorted_adj[v] = graph.Neighbors(v);
    std::sort(sorted_adj[v].begin(), sorted_adj[v].end());
  }
  for (int e = 0; e < graph.NumEdges(); ++e) {
    const auto& edge = graph.Edge(e);
    const auto& ai = sorted_adj[edge.i];
    const auto& aj = sorted_adj[edge.j];
    std::vector<int> common, common_ik, common_jk;
    size_t a = 0, b = 0;
    while (a < ai.size() && b < aj.size()) {
      if (ai[a].first < aj[b].first) {
        ++a;
      } else if (ai[a].first > aj[b].first) {
        ++b;
      } else {
        common.push_back(ai[a].first);
        common_ik.push_back(ai[a].second);
        common_jk.push_back(aj[b].second);
        ++a;
        ++b;
      }
    }
    if (common.empty()) continue;
    Rng edge_rng = rng.Stream(static_cast<uint64_t>(e));
    auto& out = table.per_edge[e];
    out.third_vertex.reserve(per_edge);
    for (int t = 0; t < per_edge; ++t) {
      const size_t pick = edge_rng.UniformInt(common.size());
      out.third_vertex.push_back(common[pick]);
      out.leg_ik.push_back(common_ik[pick]);
      out.leg_jk.push_back(common_jk[pick]);
    }
  }
  return table;
}

bool IsConnected(const ViewGraph& graph) {
  std::vector<char> seen(graph.NumNodes(), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int count = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (const auto& [u, e] : graph.Neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        frontier.push(u);
      }
    }
  }
  return count == graph.NumNodes();
}

SpanningTree PrimMst(const ViewGraph& graph, const EdgeScalarMap& weights) {
  const int n = graph.NumNodes();
  if (static_cast<int>(weights.size()) != graph.NumEdges()) {
    throw std::invalid_argument("PrimMst: weight map size mismatch");
  }
  SpanningTree tree;
  tree.root = 0;
  tree.parent.assign(n, -1);
  tree.parent_edge.assign(n, -1);
  tree.order.reserve(n);

  struct Candidate {
    double w;
    int ei, ej;  // canonical pair, for tie-breaking
    int edge;
    int from, to;
    bool operator>(const Candidate& o) const {
      if (w != o.w) return w > o.w;
      if (ei != o.ei) return ei > o.ei;
      return ej > o.ej;
    }
  };
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
  std::vector<char> in_tree(n, 0);

  auto push_neighbors = [&](int v) {
    for (const auto& [u, e] : graph.Neighbors(v)) {
      if (!in_tree[u]) {
        heap.push({weights[e], graph.Edge(e).i, graph.Edge(e).j, e, v, u});
      }
    }
  };
  in_tree[0] = 1;
  tree.order.push_back(0);
  push_neighbors(0);
  while (!heap.empty() && static_cast<int>(tree.order.size()) < n) {
    const Candidate c = heap.top();
    heap.pop();
    if (in_tree[c.to]) continue;
    in_tree[c.to] = 1;
    tree.parent[c.to] = c.from;
    tree.parent_edge[c.to] = c.edge;
    tree.order.push_back(c.to);
    push_neighbors(c.to);
  }
  if (static_cast<int>(tree.order.size()) != n) {
    throw std::runtime_error("PrimMst: graph is disconnected, no spanning tree");
  }
  return tree;
}

}  // namespace rotsync
