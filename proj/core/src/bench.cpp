#include "rotsync/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "rotsync/irls.hpp"
#include "rotsync/metrics.hpp"
#include "rotsync/mpls.hpp"

namespace rotsync {

const char* SolverName(SolverId id) {
  switch (id) {
    case SolverId::kMpls: return "mpls";
    case SolverId::kIrlsGm: return "irls-gm";
    case SolverId::kIrlsL12: return "irls-l12";
    case SolverId::kCempMst: return "cemp-mst";
  }
  return "?";
}

SolverId ParseSolverId(const std::string& name) {
  if (name == "mpls") return SolverId::kMpls;
  if (name == "irls-gm") return SolverId::kIrlsGm;
  if (name == "irls-l12") return SolverId::kIrlsL12;
  if (name == "cemp-mst") return SolverId::kCempMst;
  throw std::invalid_argument("unknown solver '" + name + "'");
}

namespace {

SolveResult RunSolver(SolverId solver, const ViewGraph& graph, uint64_t seed) {
  const Rng cycle_rng = Rng(seed).Stream("cycles");
  switch (solver) {
    case SolverId::kMpls:
      return MplsSolve(graph, MplsConfig{}, cycle_rng);
    case SolverId::kCempMst: {
      const CycleTable cycles = SampleCycles(graph, 50, cycle_rng);
      return CempMstSolve(graph, CempConfig{}, cycles);
    }
    case SolverId::kIrlsGm: {
      IrlsConfig config;
      config.loss = Loss::kGemanMcClure;
      return IrlsSolve(graph, config);
    }
    case SolverId::kIrlsL12: {
      IrlsConfig config;
      config.loss = Loss::kL12;
      return IrlsSolve(graph, config);
    }
  }
  throw std::invalid_argument("RunSolver: unknown solver");
}

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

BenchCell RunBenchCell(const BenchSpec& spec, SolverId solver, double q, double sigma,
                       uint64_t seed) {
  BenchCell cell;
  cell.solver = solver;
  cell.q = q;
  cell.sigma = sigma;
  cell.seed = seed;
  try {
    const auto start = std::chrono::steady_clock::now();
    const SyntheticInstance instance =
        GenInstance(spec.model, spec.n, spec.p, q, sigma, seed);
    const SolveResult solved = RunSolver(solver, *instance.graph, seed);
    const ErrorReport report =
        ComputeErrorReport(solved.rotations, instance.ground_truth);
    const auto stop = std::chrono::steady_clock::now();
    cell.mean_err_deg = report.mean_deg;
    cell.median_err_deg = report.median_deg;
    cell.init_iters = solved.init_iterations;
    cell.main_iters = solved.main_iterations;
    if (spec.measure_runtime) {
      cell.runtime_s = std::chrono::duration<double>(stop - start).count();
    }
    cell.ok = true;
  } catch (const std::exception&) {
    cell.ok = false;
  }
  return cell;
}

bool BenchRun(const BenchSpec& spec) {
  if (spec.q_values.empty() || spec.sigma_values.empty() || spec.seeds.empty() ||
      spec.solvers.empty() || spec.out_path.empty()) {
    throw std::invalid_argument("BenchRun: spec has empty field");
  }
  struct Job {
    SolverId solver;
    double sigma, q;
    uint64_t seed;
  };
  std::vector<Job> jobs;
  for (SolverId solver : spec.solvers) {
    for (double sigma : spec.sigma_values) {
      for (double q : spec.q_values) {
        for (uint64_t seed : spec.seeds) jobs.push_back({solver, sigma, q, seed});
      }
    }
  }
  std::vector<BenchCell> cells(jobs.size());
  std::atomic<size_t> next{0};
  int threads = spec.threads > 0
                    ? spec.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  auto worker = [&]() {
    for (size_t idx = next.fetch_add(1); idx < jobs.size(); idx = next.fetch_add(1)) {
      const Job& job = jobs[idx];
      cells[idx] = RunBenchCell(spec, job.solver, job.q, job.sigma, job.seed);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ofstream out(spec.out_path);
  if (!out) throw std::runtime_error("BenchRun: cannot open " + spec.out_path);
  out << "solver,model,n,p,q,sigma,seed,mean_err_deg,median_err_deg,"
         "init_iters,main_iters,runtime_s\n";
  const char* model_name =
      spec.model == CorruptionModel::kUniform ? "uniform" : "self-consistent";
  bool all_ok = true;
  size_t idx = 0;
  const size_t per_group = spec.seeds.size();
  while (idx < cells.size()) {
    double sum_mean = 0.0, sum_median = 0.0, sum_init = 0.0, sum_main = 0.0,
           sum_runtime = 0.0;
    bool group_ok = true;
    for (size_t s = 0; s < per_group; ++s) {
      const BenchCell& cell = cells[idx + s];
      all_ok &= cell.ok;
      group_ok &= cell.ok;
      const double mean = cell.ok ? cell.mean_err_deg : NAN;
      const double median = cell.ok ? cell.median_err_deg : NAN;
      out << SolverName(cell.solver) << ',' << model_name << ',' << spec.n << ','
          << FormatDouble(spec.p) << ',' << FormatDouble(cell.q) << ','
          << FormatDouble(cell.sigma) << ',' << cell.seed << ','
          << FormatDouble(mean) << ',' << FormatDouble(median) << ','
          << cell.init_iters << ',' << cell.main_iters << ','
          << FormatDouble(cell.runtime_s) << '\n';
      sum_mean += mean;
      sum_median += median;
      sum_init += cell.init_iters;
      sum_main += cell.main_iters;
      sum_runtime += cell.runtime_s;
    }
    const BenchCell& first = cells[idx];
    const double inv = 1.0 / static_cast<double>(per_group);
    out << SolverName(first.solver) << ',' << model_name << ',' << spec.n << ','
        << FormatDouble(spec.p) << ',' << FormatDouble(first.q) << ','
        << FormatDouble(first.sigma) << ",avg,"
        << FormatDouble(group_ok ? sum_mean * inv : NAN) << ','
        << FormatDouble(group_ok ? sum_median * inv : NAN) << ','
        << FormatDouble(sum_init * inv) << ',' << FormatDouble(sum_main * inv) << ','
        << FormatDouble(sum_runtime * inv) << '\n';
    idx += per_group;
  }
  if (!out) throw std::runtime_error("BenchRun: write failed: " + spec.out_path);
  return all_ok;
}

}  // namespace rotsync
