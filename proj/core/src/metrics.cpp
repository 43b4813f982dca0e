#include "rotsync/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotsync {

Rotation Align(const std::vector<Rotation>& est, const std::vector<Rotation>& gt) {
  if (est.size() != gt.size() || est.empty()) {
    throw std::invalid_argument("Align: size mismatch or empty input");
  }
  Eigen::Matrix3d sum = Eigen::Matrix3d::Zero();
  for (size_t i = 0; i < est.size(); ++i) sum += est[i].transpose() * gt[i];
  return so3::ProjectToSO3(sum);
}

ErrorReport ComputeErrorReport(const std::vector<Rotation>& est,
                               const std::vector<Rotation>& gt) {
  ErrorReport report;
  report.align = Align(est, gt);
  report.per_node_deg.reserve(est.size());
  double sum = 0.0;
  for (size_t i = 0; i < est.size(); ++i) {
    const double deg = 180.0 * so3::GeodesicDistance(est[i] * report.align, gt[i]);
    report.per_node_deg.push_back(deg);
    sum += deg;
  }
  report.mean_deg = sum / static_cast<double>(est.size());
  std::vector<double> sorted = report.per_node_deg;
  std::sort(sorted.begin(), sorted.end());
  report.median_deg = sorted[(sorted.size() - 1) / 2];
  return report;
}

}  // namespace rotsync
