#pragma once

#include "rotsync/solve_result.hpp"
#include "rotsync/view_graph.hpp"

namespace rotsync {

enum class Loss {
  kGemanMcClure,  // F(x) = 25 / (x^2 + 25)^2
  kL12,           // F(x) = min(x^(-3/2), A)
  kL1,            // F(x) = min(x^(-1), A)
};

struct IrlsConfig {
  Loss loss = Loss::kL12;
  double weight_cap = 1e8;
  int warm_start_iterations = 10;  // L1 iterations before the configured loss
  double convergence_tol = 0.001;
  int max_iterations = 100;
};

// Reweighting function of the residual, capped at 1e8 for the unbounded
// losses.
double IrlsWeight(double x, Loss loss, double cap = 1e8);

// Baseline IRLS over SO(3): unweighted-MST initialization, 10 L1-weighted
// LAA iterations as warm start, then the configured loss until the
// convergence criterion sum_i |dOmega_i| / n < tol or the iteration cap.
SolveResult IrlsSolve(const ViewGraph& graph, const IrlsConfig& config);

}  // namespace rotsync
