#pragma once

#include <vector>

#include "qsched/mwis.hpp"

namespace qsched {

// One Z_hi * Z_lo coupling, hi > lo.
struct QuadraticTerm {
    int hi = 0;
    int lo = 0;
    double coeff = 0.0;

    friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

/**
 * Real diagonal operator over n qubits, stored as coefficients of Pauli-Z
 * products:
 *
 *   energy(y) = constant + sum_k linear[k] * z_k + sum_(i,j) c_ij * z_i * z_j,
 *   z_k = 1 - 2 * y_k  in {+1, -1}.
 *
 * Quadratic terms are kept sorted by (hi, lo) with one entry per pair.
 */
class DiagonalHamiltonian {
  public:
    explicit DiagonalHamiltonian(int n);
    DiagonalHamiltonian(int n, double constant, std::vector<double> linear,
                        std::vector<QuadraticTerm> quadratic);

    int qubit_count() const { return n_; }
    double constant() const { return constant_; }
    const std::vector<double>& linear() const { return linear_; }
    const std::vector<QuadraticTerm>& quadratic() const { return quadratic_; }

    void add_constant(double c) { constant_ += c; }
    void add_linear(int k, double c);
    void add_quadratic(int i, int j, double c); // any order, i != j

    // this += scale * other (same qubit count).
    void add_scaled(const DiagonalHamiltonian& other, double scale);

  private:
    int n_;
    double constant_;
    std::vector<double> linear_;           // size n, Z_k coefficients
    std::vector<QuadraticTerm> quadratic_; // sorted (hi, lo)
};

// One Pauli-X term per qubit, unit coefficients.
struct MixerHamiltonian {
    int n = 0;

    int term_count() const { return n; }
};

// Penalty multiplier on the constraint part of the problem operator.
// Values below 1 cannot dominate the objective and are rejected.
class PenaltyRate {
  public:
    explicit PenaltyRate(double rho);

    double value() const { return rho_; }

  private:
    double rho_;
};

// 1-qubit map of the Boolean identity b(x) = x: (1/2)(I - Z).
// energy(0) = 0, energy(1) = 1.
DiagonalHamiltonian boolean_identity_hamiltonian();

// 2-qubit map of AND: (1/4)(I - Z_0 - Z_1 + Z_0 Z_1).
// energy(y0, y1) = y0 AND y1 on all four basis states.
DiagonalHamiltonian boolean_and_hamiltonian();

// Objective operator: sum_k (w_k / 2) Z_k, to be minimized. Selecting node k
// lowers the energy by w_k (identity offset dropped).
DiagonalHamiltonian build_objective(const MwisInstance& inst);

// Constraint operator: per edge (i, j),
//   -(w_i + w_j)/4 * (Z_i + Z_j - Z_i Z_j).
// Its spectrum is violation_count_weighted shifted down by
// sum_edges (w_i + w_j)/4, so only whole-spectrum differences are meaningful.
DiagonalHamiltonian build_constraint(const MwisInstance& inst);

// Problem operator: objective + rho * constraint, coefficient-wise.
DiagonalHamiltonian build_problem(const MwisInstance& inst, PenaltyRate rho);

MixerHamiltonian build_mixer(const MwisInstance& inst);

// Evaluates the z-polynomial on one basis state. y.size() must equal the
// qubit count.
double energy(const DiagonalHamiltonian& h, const Selection& y);

// energy() on the packed form: bit k of the mask is y_k. Single evaluation
// path shared by energy(), energy_table() and the serial reference, so all
// three agree bitwise.
double energy_of_mask(const DiagonalHamiltonian& h, std::uint64_t mask);

/**
 * Full diagonal as a table of length 2^n; n <= 24.
 *
 * Index convention: entry m holds energy of the basis state y with
 * y_k = (m >> k) & 1, i.e. bit k of the selection is binary digit k of the
 * index. Entries are independent, so the fill parallelizes with bit-identical
 * results.
 */
std::vector<double> energy_table(const DiagonalHamiltonian& h);

} // namespace qsched
