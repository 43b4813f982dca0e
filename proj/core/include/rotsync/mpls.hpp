#pragma once

#include <functional>
#include <vector>

#include "rotsync/cemp.hpp"
#include "rotsync/irls.hpp"
#include "rotsync/solve_result.hpp"
#include "rotsync/view_graph.hpp"

namespace rotsync {

struct MplsConfig {
  CempConfig cemp;
  // Weight of the cycle estimate h against the residual r at main
  // iteration t (t >= 1).
  std::function<double(int)> alpha = [](int t) { return 1.0 / (t + 1); };
  // Fraction of edges kept (not truncated) at main iteration t; t = 0 is
  // the initial weighting from CEMP estimates.
  std::function<double(int)> keep_fraction = [](int t) {
    return std::max(1.0 - 0.05 * t, 0.8);
  };
  Loss loss = Loss::kL12;
  double weight_cap = 1e8;
  double weight_floor = 1e-8;
  double convergence_tol = 0.001;
  int max_iterations = 100;
};

// Smallest value v among `values` whose empirical CDF is >= keep_fraction;
// for keep_fraction = 1 this is the maximum, so nothing lies strictly above.
double QuantileThreshold(const EdgeScalarMap& values, double keep_fraction);

// F_tau(x): F(x) capped at `cap` when x <= tau, exactly 1e-8 otherwise.
double TruncatedWeight(double x, double tau, Loss loss, double cap = 1e8);

// Propagate measurements from the root of the Prim MST under weights s;
// root rotation is the identity.
std::vector<Rotation> SpanningTreeInit(const ViewGraph& graph, const EdgeScalarMap& s);

// Cycle re-estimate of the corruption levels: per-edge weighted average of
// d_{ij,k} with weights exp(-beta (r_ik + r_jk)), log-sum-exp shifted.
// Cycle-free edges fall back to h = r.
EdgeScalarMap HEstimate(const EdgeScalarMap& residuals, const CycleTable& cycles,
                        double beta);

// Full MPLS-SO(3): CEMP pre-pass, MST initialization, then iterated
// weighted tangent least squares with truncated message-passing weights.
// Throws std::runtime_error on a disconnected graph.
SolveResult MplsSolve(const ViewGraph& graph, const MplsConfig& config,
                      const CycleTable& cycles);

// Convenience overload that samples 50 cycles per edge from `cycle_rng`.
SolveResult MplsSolve(const ViewGraph& graph, const MplsConfig& config,
                      const Rng& cycle_rng);

// CEMP + MST only: corruption estimates by message passing, rotations by
// direct propagation along the minimum weighted spanning tree.
SolveResult CempMstSolve(const ViewGraph& graph, const CempConfig& config,
                         const CycleTable& cycles);

}  // namespace rotsync
