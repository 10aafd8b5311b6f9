#include "qsched/reference.hpp"

#include <chrono>

#include "qsched/errors.hpp"
#include "qsched/gates.hpp"

#include "exact_scan.hpp"
#include "state_kernels.hpp"

namespace qsched::ref {

std::vector<double> energy_table(const DiagonalHamiltonian& h) {
    const int n = h.qubit_count();
    if (n > kMaxExactNodes)
        throw SizeLimitError("energy_table: qubit count exceeds the limit");
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<double> table(dim);
    for (std::uint64_t m = 0; m < dim; ++m)
        table[m] = energy_of_mask(h, m);
    return table;
}

void apply_phase_layer(StateVector& state, std::span<const double> table, double gamma) {
    if (table.size() != state.dimension())
        throw ContractError("phase layer: table length does not match the state dimension");
    const std::span<Amplitude> amps = state.amplitudes();
    for (std::size_t m = 0; m < amps.size(); ++m)
        amps[m] = detail::phase_rotate(amps[m], gamma * table[m]);
}

void apply_mixer_layer(StateVector& state, double beta) {
    const Gate2x2 gate = gates::rotation_x(2.0 * beta);
    const double c = gate.m[0][0].real();
    const double s = -gate.m[0][1].imag();

    const std::span<Amplitude> amps = state.amplitudes();
    const std::uint64_t half = amps.size() >> 1;
    for (int k = 0; k < state.qubit_count(); ++k) {
        const std::uint64_t bit = std::uint64_t{1} << k;
        const std::uint64_t low_mask = bit - 1;
        const std::uint64_t high_mask = ~low_mask;
        for (std::uint64_t i = 0; i < half; ++i) {
            const std::uint64_t i0 = ((i & high_mask) << 1) | (i & low_mask);
            detail::mix_pair(amps[i0], amps[i0 | bit], c, s);
        }
    }
}

double expectation(const StateVector& state, std::span<const double> table) {
    if (table.size() != state.dimension())
        throw ContractError("expectation: table length does not match the state dimension");
    const std::span<const Amplitude> amps = state.amplitudes();
    double sum = 0.0;
    for (std::size_t m = 0; m < amps.size(); ++m)
        sum += detail::probability(amps[m]) * table[m];
    return sum;
}

SolveReport solve_exact(const MwisInstance& inst) {
    const int n = inst.node_count();
    if (n > kMaxExactNodes)
        throw SizeLimitError("solve_exact: node count exceeds the limit");
    const auto t0 = std::chrono::steady_clock::now();

    const std::vector<std::uint64_t> adjacency = inst.graph.neighbor_masks();
    const std::vector<double>& weights = inst.graph.weights();
    const std::uint64_t total = std::uint64_t{1} << n;

    detail::BestSelection best;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!detail::mask_independent(adjacency, mask))
            continue;
        const double w = detail::mask_weight(weights, mask);
        if (detail::beats(w, mask, best, selection_lex_less)) {
            best.weight = w;
            best.mask = mask;
        }
    }

    SolveReport report;
    report.best = Selection::from_mask(best.mask, n);
    report.weight = best.weight;
    report.feasible = true;
    report.method = SolveMethod::exact;
    report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.metadata["search_space"] = static_cast<double>(total);
    return report;
}

} // namespace qsched::ref
