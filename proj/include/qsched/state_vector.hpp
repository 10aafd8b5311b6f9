#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qsched {

using Amplitude = std::complex<double>;

/**
 * Dense n-qubit state, 2^n complex amplitudes, n <= 24.
 *
 * Amplitude index m describes the basis state y with y_k = (m >> k) & 1,
 * matching the energy_table layout. Layer kernels mutate the buffer in
 * place; writes within one kernel touch disjoint indices, so the OpenMP
 * paths produce bit-identical amplitudes for any thread count.
 */
class StateVector {
  public:
    // All amplitudes 2^{-n/2}: the uniform superposition produced by a
    // Hadamard on every qubit of |0...0>.
    static StateVector uniform(int n);

    // |y> for the basis index y.
    static StateVector basis(int n, std::uint64_t index);

    int qubit_count() const { return n_; }
    std::size_t dimension() const { return amps_.size(); }

    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }

    double norm() const; // sqrt(sum |amp|^2), deterministic reduction

  private:
    StateVector(int n, std::vector<Amplitude> amps);

    int n_;
    std::vector<Amplitude> amps_;
};

// Outcome histogram of simulated measurements.
struct SampleSet {
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts; // bitstring -> occurrences
};

// amp[y] *= exp(-i * gamma * table[y]). table.size() must equal the state
// dimension. Magnitudes are unchanged.
void apply_phase_layer(StateVector& state, std::span<const double> table, double gamma);

// Applies exp(-i * beta * X_k) to every qubit k, i.e. the rotation-X gate at
// angle 2*beta: pairs split on bit k mix with [[cos b, -i sin b], [-i sin b, cos b]].
void apply_mixer_layer(StateVector& state, double beta);

// <state| diag(table) |state> = sum_y |amp[y]|^2 table[y].
// Fixed-block reduction: the result is bit-identical across thread counts.
double expectation(const StateVector& state, std::span<const double> table);

// Draws `shots` basis states i.i.d. from the |amplitude|^2 distribution.
// Deterministic per seed (see rng.hpp); returns counts keyed by bitstring.
SampleSet sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

std::string index_to_bitstring(std::uint64_t index, int n);
std::uint64_t bitstring_to_index(const std::string& bits);

} // namespace qsched
