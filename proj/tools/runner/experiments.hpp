#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "biphase/analysis.hpp"
#include "runner/run_config.hpp"

namespace biphase::runner {

using Files = std::vector<std::filesystem::path>;

/// Nodes per layer e-folding used by the benchmark grids, N = ceil(k gamma / eps).
inline constexpr double bench_nodes_per_efold = 200.0;

/// Per eps: profiles_<eps>.csv with r, q_fd, q_exact, q_approx, p_fd,
/// p_exact, p_approx on the grid_n grid; plus profiles_q.svg and
/// profiles_p.svg. Throws ValidationError when the grid does not resolve the
/// layer at some eps.
Files run_profiles(const RunConfig& cfg);

struct ConvergenceRun {
    ConvergenceReport report;
    Files files;
};

/// converge_summary.csv (eps, l2_q, h1_q, l2_p, h1_p, then a "slope" row)
/// and log-log charts converge_q.svg / converge_p.svg.
ConvergenceRun run_convergence(const RunConfig& cfg);

struct DecayRun {
    DecayReport report;
    Files files;
};

/// decay_summary.csv (eps, inv_eps, l2_inner, h1_inner, then a "slope" row)
/// and decay.svg.
DecayRun run_decay(const RunConfig& cfg);

struct BenchRow {
    double eps = 0.0;
    std::size_t n = 0;
    double t_full = 0.0;    ///< seconds, coupled block solve
    double t_approx = 0.0;  ///< seconds, approximant evaluation
    double speedup = 0.0;
    double speedup_noise = 0.0;  ///< relative, from the median-to-best spread of both timings
    double l2_gap = 0.0;    ///< L2 distance between the two (p_t, p_c) answers
};

struct BenchRun {
    std::vector<BenchRow> rows;
    std::optional<LineFit> gap_fit;  ///< log l2_gap against log eps
    Files files;
};

/// Times the coupled solve against the order-k approximant on the same
/// layer-resolving grid (best of 5, samples spread over 5 passes of the sweep) and writes
/// bench_summary.csv plus bench.svg.
BenchRun run_bench(const RunConfig& cfg);

/// One bench case, without writing files.
BenchRow bench_case(const RunConfig& cfg, double eps);

/// Dispatches on cfg.experiment (profiles | converge | decay | bench).
Files run_experiment(const RunConfig& cfg);

}  // namespace biphase::runner
