#include "qsched/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsched/errors.hpp"

namespace qsched {

DiagonalHamiltonian::DiagonalHamiltonian(int n) : n_(n), constant_(0.0), linear_(n, 0.0) {
    if (n < 1)
        throw ContractError("diagonal operator needs at least one qubit");
}

DiagonalHamiltonian::DiagonalHamiltonian(int n, double constant, std::vector<double> linear,
                                         std::vector<QuadraticTerm> quadratic)
    : DiagonalHamiltonian(n) {
    constant_ = constant;
    if (static_cast<int>(linear.size()) != n)
        throw ContractError("linear coefficient count must equal the qubit count");
    linear_ = std::move(linear);
    for (const QuadraticTerm& t : quadratic)
        add_quadratic(t.hi, t.lo, t.coeff);
}

void DiagonalHamiltonian::add_linear(int k, double c) {
    if (k < 0 || k >= n_)
        throw ContractError("linear term index out of range");
    linear_[k] += c;
}

void DiagonalHamiltonian::add_quadratic(int i, int j, double c) {
    if (i == j)
        throw ContractError("quadratic term needs two distinct qubits");
    const int hi = std::max(i, j);
    const int lo = std::min(i, j);
    if (lo < 0 || hi >= n_)
        throw ContractError("quadratic term index out of range");
    const QuadraticTerm key{hi, lo, 0.0};
    auto pos = std::lower_bound(quadratic_.begin(), quadratic_.end(), key,
                                [](const QuadraticTerm& a, const QuadraticTerm& b) {
                                    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
                                });
    if (pos != quadratic_.end() && pos->hi == hi && pos->lo == lo)
        pos->coeff += c;
    else
        quadratic_.insert(pos, QuadraticTerm{hi, lo, c});
}

void DiagonalHamiltonian::add_scaled(const DiagonalHamiltonian& other, double scale) {
    if (other.n_ != n_)
        throw ContractError("cannot combine operators over different qubit counts");
    constant_ += scale * other.constant_;
    for (int k = 0; k < n_; ++k)
        linear_[k] += scale * other.linear_[k];
    for (const QuadraticTerm& t : other.quadratic_)
        add_quadratic(t.hi, t.lo, scale * t.coeff);
}

PenaltyRate::PenaltyRate(double rho) : rho_(rho) {
    if (!std::isfinite(rho) || rho < 1.0)
        throw ConfigError("penalty rate must be >= 1 (got " + std::to_string(rho) +
                          "); smaller rates cannot dominate the objective");
}

DiagonalHamiltonian boolean_identity_hamiltonian() {
    DiagonalHamiltonian h(1);
    h.add_constant(0.5);
    h.add_linear(0, -0.5);
    return h;
}

DiagonalHamiltonian boolean_and_hamiltonian() {
    DiagonalHamiltonian h(2);
    h.add_constant(0.25);
    h.add_linear(0, -0.25);
    h.add_linear(1, -0.25);
    h.add_quadratic(1, 0, 0.25);
    return h;
}

DiagonalHamiltonian build_objective(const MwisInstance& inst) {
    DiagonalHamiltonian h(inst.node_count());
    const std::vector<double>& w = inst.graph.weights();
    for (int k = 0; k < inst.node_count(); ++k)
        h.add_linear(k, 0.5 * w[k]);
    return h;
}

DiagonalHamiltonian build_constraint(const MwisInstance& inst) {
    DiagonalHamiltonian h(inst.node_count());
    const std::vector<double>& w = inst.graph.weights();
    for (const Edge& e : inst.graph.edges()) {
        const double c = 0.25 * (w[e.hi] + w[e.lo]);
        h.add_linear(e.hi, -c);
        h.add_linear(e.lo, -c);
        h.add_quadratic(e.hi, e.lo, c);
    }
    return h;
}

DiagonalHamiltonian build_problem(const MwisInstance& inst, PenaltyRate rho) {
    DiagonalHamiltonian h = build_objective(inst);
    h.add_scaled(build_constraint(inst), rho.value());
    return h;
}

MixerHamiltonian build_mixer(const MwisInstance& inst) {
    return MixerHamiltonian{inst.node_count()};
}

double energy_of_mask(const DiagonalHamiltonian& h, std::uint64_t mask) {
    double e = h.constant();
    const std::vector<double>& linear = h.linear();
    for (int k = 0; k < h.qubit_count(); ++k) {
        const double z = ((mask >> k) & 1) ? -1.0 : 1.0;
        e += linear[k] * z;
    }
    for (const QuadraticTerm& t : h.quadratic()) {
        const bool opposite = (((mask >> t.hi) ^ (mask >> t.lo)) & 1) != 0;
        e += opposite ? -t.coeff : t.coeff;
    }
    return e;
}

double energy(const DiagonalHamiltonian& h, const Selection& y) {
    if (y.size() != h.qubit_count())
        throw ContractError("energy: bitstring length " + std::to_string(y.size()) +
                            " does not match qubit count " + std::to_string(h.qubit_count()));
    return energy_of_mask(h, y.to_mask());
}

std::vector<double> energy_table(const DiagonalHamiltonian& h) {
    const int n = h.qubit_count();
    if (n > kMaxExactNodes)
        throw SizeLimitError("energy_table: " + std::to_string(n) + " qubits exceeds the limit of " +
                             std::to_string(kMaxExactNodes));
    const std::int64_t dim = std::int64_t{1} << n;
    std::vector<double> table(dim);
#pragma omp parallel for schedule(static) if (dim >= 4096)
    for (std::int64_t m = 0; m < dim; ++m)
        table[m] = energy_of_mask(h, static_cast<std::uint64_t>(m));
    return table;
}

} // namespace qsched
