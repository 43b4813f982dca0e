#pragma once

#include <vector>

#include "rotsync/so3.hpp"

namespace rotsync {

struct ErrorReport {
  double mean_deg = 0.0;
  double median_deg = 0.0;  // lower-middle order statistic for even counts
  std::vector<double> per_node_deg;
  Rotation align = Rotation::Identity();
};

// Orthogonal Procrustes over SO(3): the rotation Q minimizing
// sum_i |est_i Q - gt_i|_F^2, via projection of sum_i est_i^T gt_i.
// Throws std::domain_error when the sum matrix is degenerate.
Rotation Align(const std::vector<Rotation>& est, const std::vector<Rotation>& gt);

// Angular errors in degrees after optimal alignment.
ErrorReport ComputeErrorReport(const std::vector<Rotation>& est,
                               const std::vector<Rotation>& gt);

}  // namespace rotsync
