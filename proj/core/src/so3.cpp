#include "rotsync/so3.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rotsync::so3 {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNearPi = 1e-6;
constexpr double kSmallAngle = 1e-4;
}  // namespace

Eigen::Matrix3d Hat(const TangentVector& omega) {
  Eigen::Matrix3d s;
  s << 0.0, -omega.z(), omega.y(),
       omega.z(), 0.0, -omega.x(),
       -omega.y(), omega.x(), 0.0;
  return s;
}

TangentVector Vee(const Eigen::Matrix3d& skew) {
  return {skew(2, 1), skew(0, 2), skew(1, 0)};
}

Rotation ExpMap(const TangentVector& omega) {
  const double theta = omega.norm();
  const Eigen::Matrix3d k = Hat(omega);
  if (theta < kSmallAngle) {
    // Second-order Taylor of sin(t)/t and (1-cos(t))/t^2.
    const double t2 = theta * theta;
    return Eigen::Matrix3d::Identity() + (1.0 - t2 / 6.0) * k +
           (0.5 - t2 / 24.0) * (k * k);
  }
  return Eigen::Matrix3d::Identity() + (std::sin(theta) / theta) * k +
         ((1.0 - std::cos(theta)) / (theta * theta)) * (k * k);
}

double RotationAngle(const Rotation& rot) {
  // atan2 of the skew and symmetric parts is well conditioned over [0, pi],
  // unlike acos((tr - 1) / 2) near the endpoints.
  const TangentVector v = Vee(rot - rot.transpose()) * 0.5;
  const double s = v.norm();
  const double c = (rot.trace() - 1.0) * 0.5;
  return std::atan2(s, c);
}

TangentVector LogMap(const Rotation& rot) {
  const double theta = RotationAngle(rot);
  if (theta > kPi - kNearPi) {
    // Near pi the skew part vanishes; recover the axis from the symmetric
    // part, R ~ 2 u u^T - I.
    const Eigen::Matrix3d sym = 0.5 * (rot + rot.transpose());
    Eigen::Vector3d diag = (sym.diagonal().array() + 1.0).max(0.0) * 0.5;
    int imax;
    diag.maxCoeff(&imax);
    TangentVector u;
    u[imax] = std::sqrt(diag[imax]);
    for (int j = 0; j < 3; ++j) {
      if (j != imax) u[j] = sym(imax, j) / (2.0 * u[imax]);
    }
    u.normalize();
    // The tiny skew part still fixes the sign when theta < pi; at pi it
    // vanishes and the convention "first nonzero component positive" applies.
    const TangentVector v = Vee(rot - rot.transpose()) * 0.5;
    if (v.norm() > 1e-14) {
      if (u.dot(v) < 0.0) u = -u;
    } else {
      for (int j = 0; j < 3; ++j) {
        if (std::abs(u[j]) > 1e-12) {
          if (u[j] < 0.0) u = -u;
          break;
        }
      }
    }
    return theta * u;
  }
  const TangentVector v = Vee(rot - rot.transpose()) * 0.5;  // sin(theta) * axis
  if (theta < kSmallAngle) {
    // theta / sin(theta) ~ 1 + theta^2 / 6
    return v * (1.0 + theta * theta / 6.0);
  }
  return v * (theta / std::sin(theta));
}

double GeodesicDistance(const Rotation& r1, const Rotation& r2) {
  return RotationAngle(r1 * r2.transpose()) / kPi;
}

Rotation ProjectToSO3(const Eigen::Matrix3d& a) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues()(1) < 1e-12) {
    throw std::domain_error("ProjectToSO3: rank-deficient input, projection degenerate");
  }
  const Eigen::Matrix3d u = svd.matrixU();
  const Eigen::Matrix3d v = svd.matrixV();
  const double d = (u * v.transpose()).determinant();
  return u * Eigen::Vector3d(1.0, 1.0, d < 0.0 ? -1.0 : 1.0).asDiagonal() * v.transpose();
}

Rotation SampleHaar(Rng& rng) {
  Eigen::Vector4d q;
  for (int i = 0; i < 4; ++i) q[i] = rng.Normal();
  q.normalize();
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  Rotation r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
       2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
       2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

bool IsRotation(const Eigen::Matrix3d& m, double tol) {
  if (!m.allFinite()) return false;
  const double ortho = (m.transpose() * m - Eigen::Matrix3d::Identity()).norm();
  return ortho <= tol && std::abs(m.determinant() - 1.0) <= tol;
}

}  // namespace rotsync::so3
