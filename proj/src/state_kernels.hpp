#pragma once

#include <cmath>
#include <complex>

// Per-element arithmetic of the state-vector kernels, shared between the
// OpenMP and serial reference paths so both compute identical bits.
namespace qsched::detail {

// amp * exp(-i * angle)
inline std::complex<double> phase_rotate(std::complex<double> amp, double angle) {
    const std::complex<double> phase{std::cos(angle), -std::sin(angle)};
    return amp * phase;
}

// In-place 2x2 mix with [[c, -i s], [-i s, c]].
inline void mix_pair(std::complex<double>& a0, std::complex<double>& a1, double c, double s) {
    const std::complex<double> off{0.0, -s};
    const std::complex<double> n0 = c * a0 + off * a1;
    const std::complex<double> n1 = off * a0 + c * a1;
    a0 = n0;
    a1 = n1;
}

inline double probability(std::complex<double> amp) {
    return amp.real() * amp.real() + amp.imag() * amp.imag();
}

} // namespace qsched::detail
