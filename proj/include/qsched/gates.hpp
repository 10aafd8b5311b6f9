#pragma once

#include <cmath>
#include <complex>

namespace qsched {

// 2x2 single-qubit gate matrix, row-major.
struct Gate2x2 {
    std::complex<double> m[2][2];
};

namespace gates {

inline Gate2x2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{{s, s}, {s, -s}}};
}

inline Gate2x2 pauli_x() {
    return {{{0.0, 1.0}, {1.0, 0.0}}};
}

inline Gate2x2 pauli_y() {
    using namespace std::complex_literals;
    return {{{0.0, -1.0i}, {1.0i, 0.0}}};
}

inline Gate2x2 pauli_z() {
    return {{{1.0, 0.0}, {0.0, -1.0}}};
}

inline Gate2x2 rotation_x(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const std::complex<double> is{0.0, -s};
    return {{{c, is}, {is, c}}};
}

inline Gate2x2 rotation_y(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {{{c, -s}, {s, c}}};
}

inline Gate2x2 rotation_z(double theta) {
    const std::complex<double> e{std::cos(theta / 2.0), -std::sin(theta / 2.0)};
    return {{{e, 0.0}, {0.0, std::conj(e)}}};
}

} // namespace gates
} // namespace qsched
