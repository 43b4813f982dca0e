#pragma once

#include <vector>

#include "rotsync/view_graph.hpp"

namespace rotsync {

struct SolveResult {
  std::vector<Rotation> rotations;
  // Iteration ledger split as initialization passes + main-loop iterations
  // (e.g. CEMP passes + reweighted solves).
  int init_iterations = 0;
  int main_iterations = 0;
  // Convergence statistic of each main iteration: sum_i |dOmega_i| / n.
  std::vector<double> convergence;
  EdgeScalarMap final_weights;
  EdgeScalarMap final_residuals;
};

}  // namespace rotsync
