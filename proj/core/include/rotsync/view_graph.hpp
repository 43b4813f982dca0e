#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "rotsync/rng.hpp"
#include "rotsync/so3.hpp"

namespace rotsync {

// Scalar per edge (corruption estimates, residuals, weights, ...), indexed
// by edge id in the graph's edge order.
using EdgeScalarMap = std::vector<double>;

struct MeasuredEdge {
  int i;  // i < j
  int j;
  Rotation rot;  // measurement of R_i R_j^T
};

// Undirected measurement graph. Edges are stored once with canonical
// orientation i < j; the reverse measurement is the transpose.
class ViewGraph {
 public:
  explicit ViewGraph(int num_nodes);

  // Canonicalizes to i < j. Throws on self-loops, duplicates or indices
  // out of range. `rot` is the measurement oriented from the smaller to the
  // larger index (R_ij ~ R_i R_j^T with i < j).
  void AddEdge(int i, int j, const Rotation& rot);

  int NumNodes() const { return num_nodes_; }
  int NumEdges() const { return static_cast<int>(edges_.size()); }
  const std::vector<MeasuredEdge>& Edges() const { return edges_; }
  const MeasuredEdge& Edge(int e) const { return edges_[e]; }

  // Edge id for the unordered pair {i, j}, or -1 if absent.
  int EdgeId(int i, int j) const;

  // Measurement oriented so that the result ~ R_from R_to^T.
  Rotation OrientedMeasurement(int e, int from, int to) const;

  // Neighbors of a node as (other endpoint, edge id).
  const std::vector<std::pair<int, int>>& Neighbors(int node) const {
    return adjacency_[node];
  }

 private:
  int num_nodes_;
  std::vector<MeasuredEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::unordered_map<int64_t, int> edge_index_;
};

// Per-edge sampled 3-cycles and their inconsistencies. Lists are aligned:
// entry t of an edge refers to third vertex third_vertex[t] with leg edge
// ids leg_ik[t], leg_jk[t]. Edges with no common neighbor have empty lists
// and are cycle-free.
struct CycleTable {
  struct EdgeCycles {
    std::vector<int> third_vertex;
    std::vector<int> leg_ik;
    std::vector<int> leg_jk;
    std::vector<double> inconsistency;  // d_{ij,k}, filled by cemp
  };
  std::vector<EdgeCycles> per_edge;

  bool CycleFree(int e) const { return per_edge[e].third_vertex.empty(); }
};

struct SpanningTree {
  int root = 0;
  std::vector<int> parent;       // -1 at root
  std::vector<int> parent_edge;  // edge id into the graph, -1 at root
  std::vector<int> order;        // visit order, root first; parents precede children
};

// Each unordered pair independently with probability p. Deterministic for a
// fixed rng state. Returns canonical (i, j) pairs, i < j, in lexicographic
// order.
std::vector<std::pair<int, int>> ErdosRenyi(int n, double p, Rng& rng);

// For every edge, `per_edge` i.i.d. draws with replacement from the common
// neighbors of its endpoints. Edges without common neighbors stay empty.
// Per-edge sampling streams derive from `rng` by edge id.
CycleTable SampleCycles(const ViewGraph& graph, int per_edge, const Rng& rng);

bool IsConnected(const ViewGraph& graph);

// Prim MST under the given nonnegative edge weights. Ties broken by the
// smaller (i, j) lexicographic edge. Throws std::runtime_error if the graph
// is disconnected.
SpanningTree PrimMst(const ViewGraph& graph, const EdgeScalarMap& weights);

}  // namespace rotsync
