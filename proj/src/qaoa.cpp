#include "qsched/qaoa.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qsched/errors.hpp"
#include "qsched/rng.hpp"

namespace qsched {

namespace {

constexpr double kPi = std::numbers::pi;

void check_params(const QaoaParams& params) {
    if (params.gammas.size() != params.betas.size())
        throw ContractError("angle schedules must have equal length");
    if (params.gammas.empty())
        throw ContractError("depth must be >= 1");
}

// Exact expectation of the problem operator after evolving with `params`.
// No shot noise: the optimizer works on the state itself.
double evaluate(std::span<const double> table, const QaoaParams& params) {
    const StateVector state = evolve_with_table(table, params);
    const double value = expectation(state, table);
    if (!std::isfinite(value))
        throw NumericalError("non-finite expectation during optimization");
    return value;
}

struct Restart {
    QaoaParams start;
};

std::vector<Restart> seed_restarts(std::span<const double> table, const OptimizerConfig& cfg) {
    std::vector<Restart> restarts;
    if (cfg.p == 1) {
        // Rank a coarse grid over gamma in [0, pi) x beta in [0, pi/2) and
        // descend from the best `restarts` points.
        struct Candidate {
            double value;
            int index;
            QaoaParams params;
        };
        std::vector<Candidate> grid;
        grid.reserve(static_cast<std::size_t>(cfg.grid_points) * cfg.grid_points);
        int index = 0;
        for (int i = 0; i < cfg.grid_points; ++i) {
            for (int j = 0; j < cfg.grid_points; ++j) {
                QaoaParams params;
                params.gammas = {kPi * i / cfg.grid_points};
                params.betas = {0.5 * kPi * j / cfg.grid_points};
                grid.push_back({evaluate(table, params), index++, std::move(params)});
            }
        }
        std::sort(grid.begin(), grid.end(), [](const Candidate& a, const Candidate& b) {
            return a.value != b.value ? a.value < b.value : a.index < b.index;
        });
        const int take = std::min<int>(cfg.restarts, static_cast<int>(grid.size()));
        for (int r = 0; r < take; ++r)
            restarts.push_back({std::move(grid[r].params)});
    } else {
        for (int r = 0; r < cfg.restarts; ++r) {
            Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
            QaoaParams params;
            params.gammas.resize(cfg.p);
            params.betas.resize(cfg.p);
            for (double& g : params.gammas)
                g = rng.uniform(0.0, kPi);
            for (double& b : params.betas)
                b = rng.uniform(0.0, 0.5 * kPi);
            restarts.push_back({std::move(params)});
        }
    }
    return restarts;
}

double& coordinate(QaoaParams& params, int d) {
    const int p = params.depth();
    return d < p ? params.gammas[d] : params.betas[d - p];
}

} // namespace

QaoaParams QaoaParams::zeros(int p) {
    return QaoaParams{std::vector<double>(p, 0.0), std::vector<double>(p, 0.0)};
}

void OptimizerConfig::validate() const {
    if (p < 1 || restarts < 1 || grid_points < 1 || max_iters < 1)
        throw ConfigError("optimizer counts (p, restarts, grid_points, max_iters) must be >= 1");
    if (!(step_min > 0.0) || !(step_min < step_init))
        throw ConfigError("optimizer needs 0 < step_min < step_init");
    if (!(fd_epsilon > 0.0))
        throw ConfigError("optimizer needs fd_epsilon > 0");
}

StateVector evolve_with_table(std::span<const double> table, const QaoaParams& params) {
    check_params(params);
    if (table.empty() || !std::has_single_bit(table.size()))
        throw ContractError("energy table length must be a power of two");
    const int n = std::countr_zero(table.size());

    StateVector state = StateVector::uniform(n);
    for (int l = 0; l < params.depth(); ++l) {
        apply_phase_layer(state, table, params.gammas[l]);
        apply_mixer_layer(state, params.betas[l]);
    }
    return state;
}

StateVector evolve(const MwisInstance& inst, PenaltyRate rho, const QaoaParams& params) {
    const std::vector<double> table = energy_table(build_problem(inst, rho));
    return evolve_with_table(table, params);
}

OptimizeResult optimize(const MwisInstance& inst, PenaltyRate rho, const OptimizerConfig& cfg) {
    cfg.validate();
    const std::vector<double> table = energy_table(build_problem(inst, rho));

    OptimizeResult result;
    result.expectation = std::numeric_limits<double>::infinity();
    int iteration = 0;

    for (const Restart& restart : seed_restarts(table, cfg)) {
        QaoaParams x = restart.start;
        double fx = evaluate(table, x);
        if (fx < result.expectation) {
            result.expectation = fx;
            result.params = x;
        }

        double step = cfg.step_init;
        const int dims = 2 * cfg.p;
        for (int sweep = 0; sweep < cfg.max_iters && step >= cfg.step_min; ++sweep) {
            bool improved = false;
            for (int d = 0; d < dims; ++d) {
                QaoaParams probe = x;
                coordinate(probe, d) += cfg.fd_epsilon;
                const double plus = evaluate(table, probe);
                coordinate(probe, d) = coordinate(x, d) - cfg.fd_epsilon;
                const double minus = evaluate(table, probe);
                const double gradient = (plus - minus) / (2.0 * cfg.fd_epsilon);
                if (gradient == 0.0)
                    continue;

                QaoaParams candidate = x;
                coordinate(candidate, d) -= step * (gradient > 0.0 ? 1.0 : -1.0);
                const double fc = evaluate(table, candidate);
                if (fc < fx) {
                    x = std::move(candidate);
                    fx = fc;
                    improved = true;
                }
            }
            if (fx < result.expectation) {
                result.expectation = fx;
                result.params = x;
            }
            ++iteration;
            result.trace.push_back({iteration, result.expectation});
            if (!improved)
                step *= 0.5;
        }
    }
    return result;
}

Selection repair_selection(const MwisInstance& inst, Selection sel) {
    if (sel.size() != inst.node_count())
        throw ContractError("repair_selection: selection length mismatch");
    const std::vector<double>& w = inst.graph.weights();
    for (const Edge& e : inst.graph.edges()) {
        if (sel.bits[e.hi] && sel.bits[e.lo]) {
            // Keep the heavier endpoint; on equal weights keep the lower index.
            if (w[e.lo] < w[e.hi])
                sel.bits[e.lo] = 0;
            else if (w[e.hi] < w[e.lo])
                sel.bits[e.hi] = 0;
            else
                sel.bits[e.hi] = 0;
        }
    }
    return sel;
}

SolveReport extract_solution(const MwisInstance& inst, PenaltyRate rho, const QaoaParams& params,
                             std::uint64_t shots, std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> table = energy_table(build_problem(inst, rho));
    const StateVector state = evolve_with_table(table, params);
    const double expectation_hp = expectation(state, table);
    const SampleSet samples = sample(state, shots, seed);

    // counts is keyed by bitstring and iterates in lexicographic order, so
    // the first strict maximum seen is also the lexicographic tie winner.
    bool found = false;
    Selection best;
    double best_weight = 0.0;
    std::uint64_t feasible_shots = 0;
    std::uint64_t top_count = 0;
    Selection most_frequent;
    for (const auto& [bits, count] : samples.counts) {
        const Selection sel = Selection::from_string(bits);
        if (count > top_count) {
            top_count = count;
            most_frequent = sel;
        }
        if (!is_independent(inst, sel))
            continue;
        feasible_shots += count;
        const double weight = total_weight(inst, sel);
        if (!found || weight > best_weight) {
            found = true;
            best = sel;
            best_weight = weight;
        }
    }
    if (!found) {
        best = repair_selection(inst, most_frequent);
        best_weight = total_weight(inst, best);
    }

    SolveReport report;
    report.best = best;
    report.weight = best_weight;
    report.feasible = true;
    report.method = SolveMethod::qaoa;
    report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.metadata["expectation_hp"] = expectation_hp;
    report.metadata["shots"] = static_cast<double>(shots);
    report.metadata["feasible_fraction"] =
        static_cast<double>(feasible_shots) / static_cast<double>(shots);
    return report;
}

} // namespace qsched
