#pragma once

// Independent oracles used by the unit and acceptance suites. Everything
// here deliberately avoids the library's fast paths: geometry is checked by
// stratified Monte-Carlo integration, the simulator by dense
// matrix-exponential evolution assembled from explicit gate matrices, and
// the optimizer by an exhaustive grid scan.

#include <complex>
#include <cstdint>
#include <vector>

#include "qsched/constellation.hpp"
#include "qsched/hamiltonian.hpp"
#include "qsched/mwis.hpp"
#include "qsched/qaoa.hpp"
#include "qsched/state_vector.hpp"

namespace qsched::oracle {

// Stratified (jittered-grid) Monte-Carlo estimate of the circle-circle
// intersection area: one uniform sample per cell of a grid_side x grid_side
// grid over the intersection of the two bounding boxes. grid_side = 3200
// gives > 10^7 samples with standard error well under 1e-4 km^2 at unit
// scale. Deterministic per seed for any thread count.
double monte_carlo_overlap_area(const Footprint& a, const Footprint& b, int grid_side,
                                std::uint64_t seed);

// Small dense complex matrix, row-major.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<std::complex<double>> a;

    explicit DenseMatrix(std::size_t d) : dim(d), a(d * d) {}
    std::complex<double>& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

    static DenseMatrix identity(std::size_t d);
};

DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y);

// Embeds a 2x2 gate on qubit k of an n-qubit register, bit k = binary
// digit k of the row/column index.
DenseMatrix embed_single_qubit(int n, int k, const std::complex<double> gate[2][2]);

// Dense operator from Pauli-Z products: constant * I + sum c_k Z_k +
// sum c_ij Z_i Z_j, each Z embedded via embed_single_qubit and composed by
// matrix products.
DenseMatrix dense_from_diagonal(const DiagonalHamiltonian& h);

// Dense sum of Pauli-X on every qubit.
DenseMatrix dense_mixer(int n);

// exp(-i * t * H) by scaling-and-squaring with a Taylor series.
DenseMatrix expm_minus_i(const DenseMatrix& h, double t);

std::vector<std::complex<double>> matvec(const DenseMatrix& m,
                                        const std::vector<std::complex<double>>& v);

// Alternating exact evolution exp(-i beta H_M) exp(-i gamma H_P) ... applied
// to the uniform superposition.
std::vector<std::complex<double>> dense_evolve(const DiagonalHamiltonian& hp,
                                               const QaoaParams& params);

double max_amplitude_diff(const StateVector& state,
                          const std::vector<std::complex<double>>& expected);

// Exhaustive depth-1 landscape scan over gamma in [0, 2 pi) x beta in
// [0, pi); returns the minimum expectation found.
double grid_scan_min(const MwisInstance& inst, PenaltyRate rho, int resolution);

// Seeded Bernoulli-edge instance with weights uniform in [w_lo, w_hi].
MwisInstance random_graph_instance(std::uint64_t seed, int n, double density, double w_lo = 0.5,
                                   double w_hi = 5.0);

// Total-variation distance between a sample histogram and |amplitude|^2.
double tv_distance(const SampleSet& samples, const StateVector& state);

} // namespace qsched::oracle
