#pragma once

#include <cstdint>
#include <vector>

#include "qsched/hamiltonian.hpp"
#include "qsched/mwis.hpp"
#include "qsched/state_vector.hpp"

namespace qsched {

// Depth-p angle schedule; layer l applies the phase angle gammas[l] and then
// the mixer angle betas[l].
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    int depth() const { return static_cast<int>(gammas.size()); }
    static QaoaParams zeros(int p);
};

/**
 * Settings for the classical angle search.
 *
 * The search minimizes the exact state-vector expectation (no shot noise):
 * each restart starts from a seed point and runs coordinate descent over the
 * 2p angles with central finite-difference gradients (probe fd_epsilon) and
 * fixed-size moves of `step` radians against the gradient sign; a sweep with
 * no accepted move halves the step, and a restart stops when step drops
 * below step_min or after max_iters sweeps.
 *
 * Seeding: for p = 1 a grid_points x grid_points grid over
 * gamma in [0, pi) x beta in [0, pi/2) is ranked by expectation and the best
 * `restarts` points are used; for p > 1 each restart draws angles uniformly
 * from those ranges (stream r uses derive_seed(seed, r)). The ranges only
 * seed the search; descent itself is unconstrained.
 */
struct OptimizerConfig {
    int p = 2;
    int restarts = 8;
    int grid_points = 16;
    int max_iters = 200;
    double step_init = 0.25;
    double step_min = 1e-3;
    double fd_epsilon = 1e-4;
    std::uint64_t seed = 0;

    void validate() const;
};

struct TracePoint {
    int iteration = 0;
    double best_expectation = 0.0;
};

struct OptimizeResult {
    QaoaParams params;
    double expectation = 0.0;
    std::vector<TracePoint> trace; // best-so-far, non-increasing
};

// Uniform state, then for l = 0..p-1: phase layer gammas[l], mixer betas[l].
StateVector evolve(const MwisInstance& inst, PenaltyRate rho, const QaoaParams& params);

// Same evolution against a precomputed problem-operator table.
StateVector evolve_with_table(std::span<const double> table, const QaoaParams& params);

// Minimizes expectation(evolve(params)) over the 2p angles; returns the best
// restart (ties toward the earlier restart).
OptimizeResult optimize(const MwisInstance& inst, PenaltyRate rho, const OptimizerConfig& cfg);

// Drops the lower-weight endpoint of each violated edge (canonical edge
// order; equal weights drop the higher index). Result is independent.
Selection repair_selection(const MwisInstance& inst, Selection sel);

/**
 * Measures the evolved state `shots` times and reads out a schedule.
 *
 * Among sampled bitstrings that are independent sets, returns the one of
 * maximum weight (ties: lexicographic, bit 0 most significant). If no sample
 * is feasible, greedily repairs the most frequent sample (ties again
 * lexicographic). Metadata records expectation_hp, shots and
 * feasible_fraction; the report is always feasible.
 */
SolveReport extract_solution(const MwisInstance& inst, PenaltyRate rho, const QaoaParams& params,
                             std::uint64_t shots, std::uint64_t seed);

// Library-wide run defaults (also the CLI defaults).
inline constexpr int kDefaultDepth = 2;
inline constexpr double kDefaultPenaltyRate = 2.0;
inline constexpr std::uint64_t kDefaultShots = 4096;

} // namespace qsched
