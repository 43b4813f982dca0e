#pragma once

#include <string>
#include <vector>

#include "rotsync/synth.hpp"

namespace rotsync {

enum class SolverId { kMpls, kIrlsGm, kIrlsL12, kCempMst };

const char* SolverName(SolverId id);
// Throws std::invalid_argument on an unknown name.
SolverId ParseSolverId(const std::string& name);

struct BenchSpec {
  CorruptionModel model = CorruptionModel::kUniform;
  int n = 200;
  double p = 0.5;
  std::vector<double> q_values;
  std::vector<double> sigma_values;
  std::vector<uint64_t> seeds;
  std::vector<SolverId> solvers;
  std::string out_path;
  int threads = 0;  // 0: hardware concurrency
  // When false, the runtime_s column is written as 0 so identical specs
  // produce byte-identical CSVs.
  bool measure_runtime = true;
};

// One sweep cell result; also reusable outside the CSV path.
struct BenchCell {
  SolverId solver;
  double q = 0.0;
  double sigma = 0.0;
  uint64_t seed = 0;
  bool ok = false;
  double mean_err_deg = 0.0;
  double median_err_deg = 0.0;
  int init_iters = 0;
  int main_iters = 0;
  double runtime_s = 0.0;
};

// Generates the instance for (spec.model, q, sigma, seed), samples 50 cycles
// per edge where needed, runs the solver and evaluates against the ground
// truth. Failures are captured in `ok` rather than thrown.
BenchCell RunBenchCell(const BenchSpec& spec, SolverId solver, double q, double sigma,
                       uint64_t seed);

// Full sweep over solver x sigma x q x seed on a worker pool; rows are
// written in canonical order regardless of completion order, one row per
// cell plus a seed="avg" aggregate per (solver, sigma, q). Returns false
// if any cell failed (such cells appear as NaN rows).
bool BenchRun(const BenchSpec& spec);

}  // namespace rotsync
