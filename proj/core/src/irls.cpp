#include "rotsync/irls.hpp"

#include <cmath>
#include <stdexcept>

#include "rotsync/laa.hpp"
#include "rotsync/mpls.hpp"

namespace rotsync {

double IrlsWeight(double x, Loss loss, double cap) {
  if (x < 0.0) throw std::invalid_argument("IrlsWeight: negative residual");
  switch (loss) {
    case Loss::kGemanMcClure: {
      const double d = x * x + 25.0;
      return 25.0 / (d * d);
    }
    case Loss::kL12:
      return x == 0.0 ? cap : std::min(std::pow(x, -1.5), cap);
    case Loss::kL1:
      return x == 0.0 ? cap : std::min(1.0 / x, cap);
  }
  throw std::invalid_argument("IrlsWeight: unknown loss");
}

SolveResult IrlsSolve(const ViewGraph& graph, const IrlsConfig& config) {
  if (!IsConnected(graph)) throw std::runtime_error("IrlsSolve: graph is disconnected");
  const int n = graph.NumNodes();

  SolveResult result;
  result.init_iterations = config.warm_start_iterations;
  result.rotations = SpanningTreeInit(graph, EdgeScalarMap(graph.NumEdges(), 1.0));

  EdgeScalarMap weights(graph.NumEdges(), 1.0);
  const int total_cap = config.warm_start_iterations + config.max_iterations;
  for (int t = 1; t <= total_cap; ++t) {
    const bool warm = t <= config.warm_start_iterations;
    const Loss loss = warm ? Loss::kL1 : config.loss;

    const std::vector<TangentVector> edge_tangents =
        RelativeTangents(graph, result.rotations);
    const std::vector<TangentVector> node_tangents =
        WeightedTangentLs(graph, weights, edge_tangents);
    for (int v = 0; v < n; ++v) {
      result.rotations[v] = ApplyUpdate(result.rotations[v], node_tangents[v]);
    }
    const EdgeScalarMap residuals =
        TangentResiduals(graph, node_tangents, edge_tangents);
    for (int e = 0; e < graph.NumEdges(); ++e) {
      weights[e] = IrlsWeight(residuals[e], loss, config.weight_cap);
      if (!std::isfinite(weights[e])) {
        throw std::runtime_error("IrlsSolve: non-finite weight");
      }
    }

    double stat = 0.0;
    for (int v = 0; v < n; ++v) stat += node_tangents[v].norm();
    stat /= n;
    result.convergence.push_back(stat);
    result.final_weights = weights;
    result.final_residuals = residuals;
    if (!warm) {
      result.main_iterations = t - config.warm_start_iterations;
      if (stat < config.convergence_tol) break;
    }
  }
  return result;
}

}  // namespace rotsync
