#include "rotsync/cemp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rotsync {

void ComputeCycleInconsistencies(const ViewGraph& graph, CycleTable& cycles) {
  if (cycles.per_edge.size() != static_cast<size_t>(graph.NumEdges())) {
    throw std::invalid_argument("ComputeCycleInconsistencies: table size mismatch");
  }
  for (int e = 0; e < graph.NumEdges(); ++e) {
    auto& entry = cycles.per_edge[e];
    entry.inconsistency.resize(entry.third_vertex.size());
    const auto& edge = graph.Edge(e);
    for (size_t t = 0; t < entry.third_vertex.size(); ++t) {
      const int k = entry.third_vertex[t];
      const Rotation r_jk = graph.OrientedMeasurement(entry.leg_jk[t], edge.j, k);
      const Rotation r_ki = graph.OrientedMeasurement(entry.leg_ik[t], k, edge.i);
      entry.inconsistency[t] =
          so3::GeodesicDistance(edge.rot * r_jk * r_ki, Rotation::Identity());
    }
  }
}

EdgeScalarMap CempRun(const ViewGraph& graph, const CycleTable& cycles,
                      const CempConfig& config) {
  const int m = graph.NumEdges();
  if (config.beta.empty()) throw std::invalid_argument("CempRun: empty beta schedule");
  for (size_t t = 1; t < config.beta.size(); ++t) {
    if (config.beta[t] <= config.beta[t - 1]) {
      throw std::invalid_argument("CempRun: beta schedule must be strictly increasing");
    }
  }

  EdgeScalarMap s(m, 1.0);
  for (int e = 0; e < m; ++e) {
    const auto& entry = cycles.per_edge[e];
    if (entry.third_vertex.empty()) continue;  // cycle-free: stays 1
    double sum = 0.0;
    for (double d : entry.inconsistency) sum += d;
    s[e] = sum / static_cast<double>(entry.inconsistency.size());
  }

  EdgeScalarMap next(m);
  for (double beta : config.beta) {
    for (int e = 0; e < m; ++e) {
      const auto& entry = cycles.per_edge[e];
      if (entry.third_vertex.empty()) {
        next[e] = 1.0;
        continue;
      }
      const size_t count = entry.third_vertex.size();
      double min_leg = std::numeric_limits<double>::infinity();
      for (size_t t = 0; t < count; ++t) {
        min_leg = std::min(min_leg, s[entry.leg_ik[t]] + s[entry.leg_jk[t]]);
      }
      double z = 0.0, num = 0.0;
      for (size_t t = 0; t < count; ++t) {
        const double leg = s[entry.leg_ik[t]] + s[entry.leg_jk[t]];
        const double p = std::exp(-beta * (leg - min_leg));
        z += p;
        num += p * entry.inconsistency[t];
      }
      next[e] = num / z;
    }
    s.swap(next);
  }
  return s;
}

}  // namespace rotsync
