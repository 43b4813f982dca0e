#include "rotsync/laa.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rotsync {

TangentVector RelativeTangent(const Rotation& r_i, const Rotation& r_j,
                              const Rotation& r_ij) {
  return so3::LogMap(r_i.transpose() * r_ij * r_j);
}

std::vector<TangentVector> RelativeTangents(const ViewGraph& graph,
                                            const std::vector<Rotation>& rotations) {
  std::vector<TangentVector> out(graph.NumEdges());
  for (int e = 0; e < graph.NumEdges(); ++e) {
    const auto& edge = graph.Edge(e);
    out[e] = RelativeTangent(rotations[edge.i], rotations[edge.j], edge.rot);
  }
  return out;
}

std::vector<TangentVector> WeightedTangentLs(const ViewGraph& graph,
                                             const EdgeScalarMap& weights,
                                             const std::vector<TangentVector>& edge_tangents) {
  const int n = graph.NumNodes();
  const int unknowns = n - 1;  // node 0 anchored
  std::vector<TangentVector> result(n, TangentVector::Zero());
  if (unknowns == 0) return result;

  // Weighted Laplacian over nodes 1..n-1; anchor terms drop out of the
  // matrix but not the right-hand side.
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(4 * graph.NumEdges() + n);
  Eigen::MatrixX3d rhs = Eigen::MatrixX3d::Zero(unknowns, 3);
  std::vector<double> degree(unknowns, 0.0);
  for (int e = 0; e < graph.NumEdges(); ++e) {
    const auto& edge = graph.Edge(e);
    const double w = weights[e];
    const TangentVector& d = edge_tangents[e];
    const int a = edge.i - 1;
    const int b = edge.j - 1;
    if (a >= 0) degree[a] += w;
    if (b >= 0) degree[b] += w;
    if (a >= 0 && b >= 0) {
      triplets.emplace_back(a, b, -w);
      triplets.emplace_back(b, a, -w);
    }
    // Gradient of w |x_i - x_j - d|^2.
    if (a >= 0) rhs.row(a) += w * d.transpose();
    if (b >= 0) rhs.row(b) -= w * d.transpose();
  }
  for (int v = 0; v < unknowns; ++v) triplets.emplace_back(v, v, degree[v]);

  Eigen::SparseMatrix<double> lap(unknowns, unknowns);
  lap.setFromTriplets(triplets.begin(), triplets.end());

  Eigen::MatrixX3d sol(unknowns, 3);
  if (n <= 5000) {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("WeightedTangentLs: Laplacian factorization failed (graph disconnected under effective weights?)");
    }
    sol = solver.solve(rhs);
  } else {
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                             Eigen::DiagonalPreconditioner<double>> solver;
    solver.setTolerance(1e-10);
    solver.compute(lap);
    sol = solver.solve(rhs);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("WeightedTangentLs: CG did not converge");
    }
  }
  if (!sol.allFinite()) {
    throw std::runtime_error("WeightedTangentLs: non-finite solution, system ill-posed");
  }
  for (int v = 1; v < n; ++v) result[v] = sol.row(v - 1).transpose();
  return result;
}

Rotation ApplyUpdate(const Rotation& r_prev, const TangentVector& d_omega) {
  return r_prev * so3::ExpMap(d_omega);
}

EdgeScalarMap TangentResiduals(const ViewGraph& graph,
                               const std::vector<TangentVector>& node_tangents,
                               const std::vector<TangentVector>& edge_tangents) {
  EdgeScalarMap r(graph.NumEdges());
  for (int e = 0; e < graph.NumEdges(); ++e) {
    const auto& edge = graph.Edge(e);
    const double norm =
        (node_tangents[edge.i] - node_tangents[edge.j] - edge_tangents[e]).norm();
    r[e] = std::min(norm / std::numbers::pi, 1.0);
  }
  return r;
}

}  // namespace rotsync
