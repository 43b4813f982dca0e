#pragma once

#include <Eigen/Core>

#include "rotsync/rng.hpp"

namespace rotsync {

// A rotation is a 3x3 special-orthogonal matrix; a tangent vector is the
// 3-vector omega with [omega]_x in so(3).
using Rotation = Eigen::Matrix3d;
using TangentVector = Eigen::Vector3d;

namespace so3 {

// Cross-product (hat) matrix of omega.
Eigen::Matrix3d Hat(const TangentVector& omega);

// Inverse of Hat on skew-symmetric matrices.
TangentVector Vee(const Eigen::Matrix3d& skew);

// Matrix exponential of [omega]_x via Rodrigues' formula.
Rotation ExpMap(const TangentVector& omega);

// Principal matrix logarithm, returned as the tangent vector with
// |omega| <= pi. At angle pi the axis sign is fixed so that the first
// nonzero component is positive.
TangentVector LogMap(const Rotation& rot);

// Rotation angle of R in [0, pi].
double RotationAngle(const Rotation& rot);

// Normalized geodesic distance |log(R1 R2^T)|_F / (sqrt(2) pi) = angle/pi,
// so the diameter of SO(3) is 1.
double GeodesicDistance(const Rotation& r1, const Rotation& r2);

// Nearest rotation in Frobenius norm: U diag(1, 1, det(UV^T)) V^T from the
// SVD of A. Throws std::domain_error if the second singular value is below
// 1e-12 (projection not well defined).
Rotation ProjectToSO3(const Eigen::Matrix3d& a);

// Uniform (Haar) rotation from a normalized Gaussian quaternion.
Rotation SampleHaar(Rng& rng);

// Orthonormality and determinant check, Frobenius tolerance tol.
bool IsRotation(const Eigen::Matrix3d& m, double tol = 1e-9);

}  // namespace so3
}  // namespace rotsync
