#include "qsched/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsched/errors.hpp"
#include "qsched/gates.hpp"
#include "qsched/mwis.hpp"
#include "qsched/rng.hpp"

#include "state_kernels.hpp"

namespace qsched {

namespace {

// Fixed-size blocks keep parallel reductions bit-identical for any thread
// count: each block is summed serially, block sums are combined serially.
constexpr std::int64_t kReductionBlock = 4096;

// Below this many elements the fork/join overhead dwarfs the loop body.
constexpr std::int64_t kParallelCutoff = 4096;

template <typename Term>
double blocked_sum(std::int64_t count, Term&& term) {
    const std::int64_t nblocks = (count + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static) if (nblocks > 1)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::int64_t begin = b * kReductionBlock;
        const std::int64_t end = std::min(begin + kReductionBlock, count);
        double s = 0.0;
        for (std::int64_t i = begin; i < end; ++i)
            s += term(i);
        partial[b] = s;
    }
    double total = 0.0;
    for (double p : partial)
        total += p;
    return total;
}

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxExactNodes)
        throw SizeLimitError("state vector supports 1 to " + std::to_string(kMaxExactNodes) +
                             " qubits (got " + std::to_string(n) + ")");
}

} // namespace

StateVector::StateVector(int n, std::vector<Amplitude> amps) : n_(n), amps_(std::move(amps)) {}

StateVector StateVector::uniform(int n) {
    check_qubit_count(n);
    const std::size_t dim = std::size_t{1} << n;
    const double amp = 1.0 / std::sqrt(std::ldexp(1.0, n));
    return StateVector(n, std::vector<Amplitude>(dim, Amplitude{amp, 0.0}));
}

StateVector StateVector::basis(int n, std::uint64_t index) {
    check_qubit_count(n);
    const std::size_t dim = std::size_t{1} << n;
    if (index >= dim)
        throw ContractError("basis state index out of range");
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[index] = Amplitude{1.0, 0.0};
    return StateVector(n, std::move(amps));
}

double StateVector::norm() const {
    const double sq = blocked_sum(static_cast<std::int64_t>(amps_.size()),
                                  [&](std::int64_t i) { return detail::probability(amps_[i]); });
    return std::sqrt(sq);
}

void apply_phase_layer(StateVector& state, std::span<const double> table, double gamma) {
    if (table.size() != state.dimension())
        throw ContractError("phase layer: table length does not match the state dimension");
    const std::span<Amplitude> amps = state.amplitudes();
    const std::int64_t dim = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
    for (std::int64_t m = 0; m < dim; ++m)
        amps[m] = detail::phase_rotate(amps[m], gamma * table[m]);
}

void apply_mixer_layer(StateVector& state, double beta) {
    // exp(-i beta X) on qubit k equals the rotation-X gate at angle 2*beta.
    const Gate2x2 gate = gates::rotation_x(2.0 * beta);
    const double c = gate.m[0][0].real();
    const double s = -gate.m[0][1].imag();

    const std::span<Amplitude> amps = state.amplitudes();
    const std::int64_t half = static_cast<std::int64_t>(amps.size() >> 1);
    for (int k = 0; k < state.qubit_count(); ++k) {
        const std::uint64_t bit = std::uint64_t{1} << k;
        const std::uint64_t low_mask = bit - 1;
        const std::uint64_t high_mask = ~low_mask;
#pragma omp parallel for schedule(static) if (half >= kParallelCutoff)
        for (std::int64_t i = 0; i < half; ++i) {
            const std::uint64_t u = static_cast<std::uint64_t>(i);
            const std::uint64_t i0 = ((u & high_mask) << 1) | (u & low_mask);
            const std::uint64_t i1 = i0 | bit;
            detail::mix_pair(amps[i0], amps[i1], c, s);
        }
    }
}

double expectation(const StateVector& state, std::span<const double> table) {
    if (table.size() != state.dimension())
        throw ContractError("expectation: table length does not match the state dimension");
    const std::span<const Amplitude> amps = state.amplitudes();
    return blocked_sum(static_cast<std::int64_t>(amps.size()),
                       [&](std::int64_t m) { return detail::probability(amps[m]) * table[m]; });
}

SampleSet sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1)
        throw ContractError("sample: shots must be >= 1");
    const std::span<const Amplitude> amps = state.amplitudes();

    // Inverse-CDF over sorted uniforms: one sweep of the amplitude array,
    // counts identical to independent draws.
    std::vector<double> uniforms(shots);
    Rng rng(seed);
    for (double& u : uniforms)
        u = rng.uniform();
    std::sort(uniforms.begin(), uniforms.end());

    std::map<std::uint64_t, std::uint64_t> by_index;
    std::size_t next = 0;
    double cumulative = 0.0;
    std::uint64_t last_nonzero = 0;
    for (std::uint64_t m = 0; m < amps.size() && next < shots; ++m) {
        const double p = detail::probability(amps[m]);
        if (p > 0.0)
            last_nonzero = m;
        cumulative += p;
        std::uint64_t hits = 0;
        while (next < shots && uniforms[next] < cumulative) {
            ++hits;
            ++next;
        }
        if (hits > 0)
            by_index[m] += hits;
    }
    // Uniforms beyond the accumulated total (norm rounding) land on the last
    // outcome with mass.
    if (next < shots) {
        for (std::uint64_t m = last_nonzero + 1; m < amps.size(); ++m)
            if (detail::probability(amps[m]) > 0.0)
                last_nonzero = m;
        by_index[last_nonzero] += shots - next;
    }

    SampleSet set;
    set.shots = shots;
    for (const auto& [index, count] : by_index)
        set.counts[index_to_bitstring(index, state.qubit_count())] = count;
    return set;
}

std::string index_to_bitstring(std::uint64_t index, int n) {
    std::string s(n, '0');
    for (int k = 0; k < n; ++k)
        if ((index >> k) & 1)
            s[k] = '1';
    return s;
}

std::uint64_t bitstring_to_index(const std::string& bits) {
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1')
            index |= std::uint64_t{1} << k;
        else if (bits[k] != '0')
            throw ContractError("bitstring must contain only 0/1");
    }
    return index;
}

} // namespace qsched
