#pragma once

#include <span>
#include <vector>

#include "qsched/hamiltonian.hpp"
#include "qsched/mwis.hpp"
#include "qsched/state_vector.hpp"

// Plain serial counterparts of the OpenMP kernels. Kept as the readable
// baseline: tests compare the parallel kernels against these (bit-identical
// for element-wise kernels and the exact solver), and tools/bench_kernels
// times the two side by side.
namespace qsched::ref {

std::vector<double> energy_table(const DiagonalHamiltonian& h);

void apply_phase_layer(StateVector& state, std::span<const double> table, double gamma);

void apply_mixer_layer(StateVector& state, double beta);

// Straight left-to-right accumulation (reduction order differs from the
// parallel kernel's fixed-block sums; agreement is to rounding, not bits).
double expectation(const StateVector& state, std::span<const double> table);

SolveReport solve_exact(const MwisInstance& inst);

} // namespace qsched::ref
