// Times the OpenMP kernels against their serial reference implementations
// on one synthetic instance and prints a speedup table. Every pair is also
// cross-checked so the benchmark doubles as a smoke test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "qsched/hamiltonian.hpp"
#include "qsched/mwis.hpp"
#include "qsched/qaoa.hpp"
#include "qsched/reference.hpp"
#include "qsched/rng.hpp"
#include "qsched/state_vector.hpp"

using namespace qsched;

namespace {

MwisInstance random_instance(std::uint64_t seed, int n, double density) {
    Rng rng(seed);
    std::vector<double> weights(n);
    for (double& w : weights)
        w = rng.uniform(0.5, 5.0);
    std::vector<Edge> edges;
    for (int hi = 1; hi < n; ++hi)
        for (int lo = 0; lo < hi; ++lo)
            if (rng.uniform() < density)
                edges.push_back({hi, lo});
    return MwisInstance{ConflictGraph(n, std::move(weights), std::move(edges))};
}

template <typename F>
double best_of(int reps, F&& body) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        best = std::min(best, ms);
    }
    return best;
}

void print_row(const std::string& kernel, double serial_ms, double omp_ms, bool ok) {
    std::cout << std::left << std::setw(14) << kernel << std::right << std::fixed
              << std::setprecision(2) << std::setw(12) << serial_ms << std::setw(12) << omp_ms
              << std::setw(10) << std::setprecision(2) << serial_ms / omp_ms << "x   "
              << (ok ? "ok" : "MISMATCH") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    int n = 20;
    int reps = 3;
    double density = 0.3;
    CLI::App app{"serial vs OpenMP kernel timings"};
    app.add_option("--qubits,-n", n, "instance size (state dimension 2^n)")
        ->check(CLI::Range(2, 24));
    app.add_option("--reps", reps, "repetitions per kernel (best-of)")->check(CLI::Range(1, 50));
    app.add_option("--density", density, "edge density of the synthetic graph");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns are serial\n";
#endif
    std::cout << "instance: n=" << n << " density=" << density << " reps=" << reps << "\n\n";
    std::cout << std::left << std::setw(14) << "kernel" << std::right << std::setw(12)
              << "serial(ms)" << std::setw(12) << "openmp(ms)" << std::setw(11) << "speedup"
              << "   check\n";

    const MwisInstance inst = random_instance(42, n, density);
    const DiagonalHamiltonian hp = build_problem(inst, PenaltyRate(2.0));

    std::vector<double> table_serial, table_omp;
    const double t_table_s = best_of(reps, [&] { table_serial = ref::energy_table(hp); });
    const double t_table_p = best_of(reps, [&] { table_omp = energy_table(hp); });
    print_row("energy_table", t_table_s, t_table_p, table_serial == table_omp);

    StateVector a = StateVector::uniform(n);
    StateVector b = StateVector::uniform(n);
    const double t_phase_s =
        best_of(reps, [&] { ref::apply_phase_layer(a, table_serial, 0.37); });
    const double t_phase_p = best_of(reps, [&] { apply_phase_layer(b, table_omp, 0.37); });
    bool phase_ok = true;
    for (std::size_t i = 0; i < a.dimension(); ++i)
        phase_ok &= a.amplitudes()[i] == b.amplitudes()[i];
    print_row("phase_layer", t_phase_s, t_phase_p, phase_ok);

    const double t_mix_s = best_of(reps, [&] { ref::apply_mixer_layer(a, 0.21); });
    const double t_mix_p = best_of(reps, [&] { apply_mixer_layer(b, 0.21); });
    bool mix_ok = true;
    for (std::size_t i = 0; i < a.dimension(); ++i)
        mix_ok &= a.amplitudes()[i] == b.amplitudes()[i];
    print_row("mixer_layer", t_mix_s, t_mix_p, mix_ok);

    double e_serial = 0.0, e_omp = 0.0;
    const double t_exp_s = best_of(reps, [&] { e_serial = ref::expectation(a, table_serial); });
    const double t_exp_p = best_of(reps, [&] { e_omp = expectation(b, table_omp); });
    print_row("expectation", t_exp_s, t_exp_p, std::abs(e_serial - e_omp) < 1e-9);

    SolveReport r_serial, r_omp;
    const double t_mwis_s = best_of(reps, [&] { r_serial = ref::solve_exact(inst); });
    const double t_mwis_p = best_of(reps, [&] { r_omp = solve_exact(inst); });
    print_row("solve_exact", t_mwis_s, t_mwis_p,
              r_serial.best == r_omp.best && r_serial.weight == r_omp.weight);

    return 0;
}
