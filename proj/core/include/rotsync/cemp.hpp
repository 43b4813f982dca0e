#pragma once

#include <vector>

#include "rotsync/view_graph.hpp"

namespace rotsync {

struct CempConfig {
  // Strictly increasing, positive. beta[t] weights pass t; beta.size() passes
  // are run in total. Default: 2^t for t = 0..5.
  std::vector<double> beta = {1, 2, 4, 8, 16, 32};

  double BetaFinal() const { return beta.back(); }
  static CempConfig Default() { return {}; }
};

// Fills d_{ij,k} = d(R_ij R_jk R_ki, I) for every sampled cycle, using the
// canonical orientation convention of ViewGraph.
void ComputeCycleInconsistencies(const ViewGraph& graph, CycleTable& cycles);

// Cycle-edge message passing: s_{ij,0} is the plain mean of d_{ij,k}; each
// pass reweights cycles by exp(-beta_t (s_ik + s_jk)) (log-sum-exp shifted
// per edge so the normalizer never underflows) and averages. Cycle-free
// edges are assigned the constant corruption level 1.
EdgeScalarMap CempRun(const ViewGraph& graph, const CycleTable& cycles,
                      const CempConfig& config);

}  // namespace rotsync
