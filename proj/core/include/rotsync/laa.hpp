#pragma once

#include <vector>

#include "rotsync/view_graph.hpp"

namespace rotsync {

// One Lie-algebraic averaging step: the weighted least squares over SO(3)
// lifted to the tangent space at the identity.

// log(R_i^T R_ij R_j), with R_ij oriented i -> j.
TangentVector RelativeTangent(const Rotation& r_i, const Rotation& r_j,
                              const Rotation& r_ij);

// Per-edge relative tangents for the whole graph, canonical orientation
// (edge e contributes the residual dOmega_i - dOmega_j - dOmega_ij with
// i < j).
std::vector<TangentVector> RelativeTangents(const ViewGraph& graph,
                                            const std::vector<Rotation>& rotations);

// Minimizes sum_e w_e |dOmega_i - dOmega_j - dOmega_ij|^2 over per-node
// tangent vectors with node 0 anchored at zero. Sparse Cholesky of the
// weighted Laplacian for n <= 5000, Jacobi-preconditioned CG beyond.
// Throws std::runtime_error on a numerically singular system.
std::vector<TangentVector> WeightedTangentLs(const ViewGraph& graph,
                                             const EdgeScalarMap& weights,
                                             const std::vector<TangentVector>& edge_tangents);

// R_prev * exp([dOmega]_x).
Rotation ApplyUpdate(const Rotation& r_prev, const TangentVector& d_omega);

// r_e = |dOmega_i - dOmega_j - dOmega_ij|_2 / pi (the Frobenius form on
// skew matrices divided by sqrt(2) pi), clipped to [0, 1].
EdgeScalarMap TangentResiduals(const ViewGraph& graph,
                               const std::vector<TangentVector>& node_tangents,
                               const std::vector<TangentVector>& edge_tangents);

}  // namespace rotsync
