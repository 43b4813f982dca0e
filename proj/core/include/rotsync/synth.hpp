#pragma once

#include <memory>
#include <vector>

#include "rotsync/rng.hpp"
#include "rotsync/view_graph.hpp"

namespace rotsync {

enum class CorruptionModel { kUniform, kSelfConsistent };

struct SyntheticInstance {
  std::unique_ptr<ViewGraph> graph;
  std::vector<Rotation> ground_truth;
  std::vector<bool> edge_is_bad;       // per edge id
  EdgeScalarMap true_corruption;       // s*_ij
  int graph_resamples = 0;             // disconnected draws discarded
};

// Proj(rstar + sigma * G) with G i.i.d. standard normal; exact for
// sigma = 0.
Rotation Perturb(const Rotation& rstar, double sigma, Rng& rng);

// Uniform corruption: Erdos-Renyi graph, Haar ground truth; each edge
// independently replaced by a Haar rotation with probability q, otherwise
// the noisy true ratio. Independent named streams (graph, ground truth,
// labels, noise, corruption) derive from `seed`, so changing q does not
// perturb the graph draw. Disconnected graphs are resampled with an
// incremented stream.
SyntheticInstance GenUniform(int n, double p, double q, double sigma, uint64_t seed);

// Self-consistent corruption: a second, internally consistent Haar class
// supplies the relative rotations of bad edges, so bad cycles look good.
SyntheticInstance GenSelfConsistent(int n, double p, double q, double sigma,
                                    uint64_t seed);

SyntheticInstance GenInstance(CorruptionModel model, int n, double p, double q,
                              double sigma, uint64_t seed);

}  // namespace rotsync
