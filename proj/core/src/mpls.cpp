#include "rotsync/mpls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rotsync/laa.hpp"

namespace rotsync {

double QuantileThreshold(const EdgeScalarMap& values, double keep_fraction) {
  if (values.empty()) throw std::invalid_argument("QuantileThreshold: empty values");
  if (keep_fraction < 0.0 || keep_fraction > 1.0) {
    throw std::invalid_argument("QuantileThreshold: keep_fraction outside [0, 1]");
  }
  EdgeScalarMap sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const size_t m = sorted.size();
  const size_t idx = keep_fraction <= 0.0
                         ? 0
                         : static_cast<size_t>(std::ceil(keep_fraction * m)) - 1;
  return sorted[std::min(idx, m - 1)];
}

double TruncatedWeight(double x, double tau, Loss loss, double cap) {
  if (x > tau) return 1e-8;
  return IrlsWeight(x, loss, cap);
}

std::vector<Rotation> SpanningTreeInit(const ViewGraph& graph, const EdgeScalarMap& s) {
  const SpanningTree tree = PrimMst(graph, s);
  std::vector<Rotation> rotations(graph.NumNodes());
  rotations[tree.root] = Rotation::Identity();
  for (size_t t = 1; t < tree.order.size(); ++t) {
    const int v = tree.order[t];
    const int p = tree.parent[v];
    // R_v ~ R_vp R_p with R_vp the measurement oriented v -> p.
    rotations[v] =
        graph.OrientedMeasurement(tree.parent_edge[v], v, p) * rotations[p];
  }
  return rotations;
}

EdgeScalarMap HEstimate(const EdgeScalarMap& residuals, const CycleTable& cycles,
                        double beta) {
  const size_t m = cycles.per_edge.size();
  EdgeScalarMap h(m);
  for (size_t e = 0; e < m; ++e) {
    const auto& entry = cycles.per_edge[e];
    if (entry.third_vertex.empty()) {
      h[e] = residuals[e];
      continue;
    }
    double min_leg = std::numeric_limits<double>::infinity();
    for (size_t t = 0; t < entry.third_vertex.size(); ++t) {
      min_leg = std::min(min_leg, residuals[entry.leg_ik[t]] + residuals[entry.leg_jk[t]]);
    }
    double z = 0.0, num = 0.0;
    for (size_t t = 0; t < entry.third_vertex.size(); ++t) {
      const double leg = residuals[entry.leg_ik[t]] + residuals[entry.leg_jk[t]];
      const double q = std::exp(-beta * (leg - min_leg));
      z += q;
      num += q * entry.inconsistency[t];
    }
    h[e] = num / z;
  }
  return h;
}

namespace {

void CheckFinite(const EdgeScalarMap& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::runtime_error(std::string("MplsSolve: non-finite ") + what);
    }
  }
}

}  // namespace

SolveResult MplsSolve(const ViewGraph& graph, const MplsConfig& config,
                      const CycleTable& cycles) {
  if (!IsConnected(graph)) throw std::runtime_error("MplsSolve: graph is disconnected");

  CycleTable table = cycles;
  ComputeCycleInconsistencies(graph, table);
  const EdgeScalarMap s = CempRun(graph, table, config.cemp);
  const double beta_final = config.cemp.BetaFinal();

  SolveResult result;
  result.init_iterations = static_cast<int>(config.cemp.beta.size());
  result.rotations = SpanningTreeInit(graph, s);

  // w_{ij,0} = F_{tau_0}(s_{ij,T}); keep fraction 1 at t = 0, so the
  // truncation branch is never taken.
  const double tau0 = QuantileThreshold(s, config.keep_fraction(0));
  EdgeScalarMap weights(graph.NumEdges());
  for (int e = 0; e < graph.NumEdges(); ++e) {
    weights[e] = std::max(TruncatedWeight(s[e], tau0, config.loss, config.weight_cap),
                          config.weight_floor);
  }

  const int n = graph.NumNodes();
  for (int t = 1; t <= config.max_iterations; ++t) {
    const std::vector<TangentVector> edge_tangents =
        RelativeTangents(graph, result.rotations);
    const std::vector<TangentVector> node_tangents =
        WeightedTangentLs(graph, weights, edge_tangents);
    for (int v = 0; v < n; ++v) {
      result.rotations[v] = ApplyUpdate(result.rotations[v], node_tangents[v]);
    }
    const EdgeScalarMap residuals =
        TangentResiduals(graph, node_tangents, edge_tangents);
    CheckFinite(residuals, "residuals");

    const EdgeScalarMap h = HEstimate(residuals, table, beta_final);
    const double alpha = config.alpha(t);
    EdgeScalarMap combined(graph.NumEdges());
    for (int e = 0; e < graph.NumEdges(); ++e) {
      combined[e] = alpha * h[e] + (1.0 - alpha) * residuals[e];
    }
    const double tau = QuantileThreshold(combined, config.keep_fraction(t));
    for (int e = 0; e < graph.NumEdges(); ++e) {
      weights[e] =
          std::max(TruncatedWeight(combined[e], tau, config.loss, config.weight_cap),
                   config.weight_floor);
    }
    CheckFinite(weights, "weights");

    double stat = 0.0;
    for (int v = 0; v < n; ++v) stat += node_tangents[v].norm();
    stat /= n;
    result.convergence.push_back(stat);
    result.main_iterations = t;
    result.final_weights = weights;
    result.final_residuals = residuals;
    if (stat < config.convergence_tol) break;
  }
  return result;
}

SolveResult MplsSolve(const ViewGraph& graph, const MplsConfig& config,
                      const Rng& cycle_rng) {
  const CycleTable cycles = SampleCycles(graph, 50, cycle_rng);
  return MplsSolve(graph, config, cycles);
}

SolveResult CempMstSolve(const ViewGraph& graph, const CempConfig& config,
                         const CycleTable& cycles) {
  if (!IsConnected(graph)) throw std::runtime_error("CempMstSolve: graph is disconnected");
  CycleTable table = cycles;
  ComputeCycleInconsistencies(graph, table);
  const EdgeScalarMap s = CempRun(graph, table, config);
  SolveResult result;
  result.init_iterations = static_cast<int>(config.beta.size());
  result.main_iterations = 0;
  result.rotations = SpanningTreeInit(graph, s);
  result.final_residuals = s;
  return result;
}

}  // namespace rotsync
