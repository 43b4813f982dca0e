#include "rotsync/synth.hpp"

#include <stdexcept>

namespace rotsync {

Rotation Perturb(const Rotation& rstar, double sigma, Rng& rng) {
  if (sigma < 0.0) throw std::invalid_argument("Perturb: negative sigma");
  if (sigma == 0.0) return rstar;
  for (int attempt = 0; attempt < 2; ++attempt) {
    Eigen::Matrix3d noise;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) noise(r, c) = rng.Normal();
    }
    try {
      return so3::ProjectToSO3(rstar + sigma * noise);
    } catch (const std::domain_error&) {
      // Degenerate projection: resample once, then give up.
    }
  }
  throw std::runtime_error("Perturb: repeated degenerate projection");
}

namespace {

std::vector<std::pair<int, int>> SampleConnectedEdges(int n, double p, const Rng& base,
                                                      int* resamples) {
  // A fixed cap keeps a pathological (n, p) from looping forever; at the
  // scales used here the first draw succeeds essentially always.
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rng graph_rng = base.Stream("graph").Stream(static_cast<uint64_t>(attempt));
    auto pairs = ErdosRenyi(n, p, graph_rng);
    ViewGraph probe(n);
    for (const auto& [i, j] : pairs) probe.AddEdge(i, j, Rotation::Identity());
    if (IsConnected(probe)) {
      *resamples = attempt;
      return pairs;
    }
  }
  throw std::runtime_error("SampleConnectedEdges: no connected graph after 64 draws");
}

SyntheticInstance Generate(CorruptionModel model, int n, double p, double q,
                           double sigma, uint64_t seed) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("Generate: q outside [0, 1]");
  const Rng base(seed);
  SyntheticInstance instance;
  const auto pairs = SampleConnectedEdges(n, p, base, &instance.graph_resamples);

  Rng gt_rng = base.Stream("ground truth");
  instance.ground_truth.resize(n);
  for (int v = 0; v < n; ++v) instance.ground_truth[v] = so3::SampleHaar(gt_rng);

  std::vector<Rotation> alt;
  if (model == CorruptionModel::kSelfConsistent) {
    Rng alt_rng = base.Stream("alt class");
    alt.resize(n);
    for (int v = 0; v < n; ++v) alt[v] = so3::SampleHaar(alt_rng);
  }

  Rng label_rng = base.Stream("labels");
  Rng noise_rng = base.Stream("noise");
  Rng corrupt_rng = base.Stream("corruption");

  instance.graph = std::make_unique<ViewGraph>(n);
  instance.edge_is_bad.reserve(pairs.size());
  instance.true_corruption.reserve(pairs.size());
  for (const auto& [i, j] : pairs) {
    const Rotation true_ratio =
        instance.ground_truth[i] * instance.ground_truth[j].transpose();
    const bool bad = label_rng.Bernoulli(q);
    Rotation meas;
    if (!bad) {
      meas = Perturb(true_ratio, sigma, noise_rng);
    } else if (model == CorruptionModel::kUniform) {
      meas = so3::SampleHaar(corrupt_rng);
    } else {
      meas = Perturb(alt[i] * alt[j].transpose(), sigma, noise_rng);
    }
    instance.graph->AddEdge(i, j, meas);
    instance.edge_is_bad.push_back(bad);
    instance.true_corruption.push_back(so3::GeodesicDistance(meas, true_ratio));
  }
  return instance;
}

}  // namespace

SyntheticInstance GenUniform(int n, double p, double q, double sigma, uint64_t seed) {
  return Generate(CorruptionModel::kUniform, n, p, q, sigma, seed);
}

SyntheticInstance GenSelfConsistent(int n, double p, double q, double sigma,
                                    uint64_t seed) {
  return Generate(CorruptionModel::kSelfConsistent, n, p, q, sigma, seed);
}

SyntheticInstance GenInstance(CorruptionModel model, int n, double p, double q,
                              double sigma, uint64_t seed) {
  return Generate(model, n, p, q, sigma, seed);
}

}  // namespace rotsync
