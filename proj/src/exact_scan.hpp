#pragma once

#include <bit>
#include <cstdint>
#include <vector>

// Shared pieces of the exhaustive MWIS scan, used by both the OpenMP solver
// and the serial reference so the two stay bit-identical.
namespace qsched::detail {

// Sum of selected weights, accumulated in ascending node order.
inline double mask_weight(const std::vector<double>& weights, std::uint64_t mask) {
    double w = 0.0;
    while (mask != 0) {
        const int k = std::countr_zero(mask);
        w += weights[k];
        mask &= mask - 1;
    }
    return w;
}

inline bool mask_independent(const std::vector<std::uint64_t>& adjacency, std::uint64_t mask) {
    std::uint64_t rest = mask;
    while (rest != 0) {
        const int k = std::countr_zero(rest);
        if ((adjacency[k] & mask) != 0)
            return false;
        rest &= rest - 1;
    }
    return true;
}

struct BestSelection {
    double weight = -1.0; // below any feasible weight; the empty set always wins over this
    std::uint64_t mask = 0;
};

// Strict "candidate beats current" under (weight desc, lexicographic asc).
// The order is total over distinct masks, so the scan's winner does not
// depend on visit order.
inline bool beats(double weight, std::uint64_t mask, const BestSelection& cur,
                  bool lex_less(std::uint64_t, std::uint64_t)) {
    if (weight != cur.weight)
        return weight > cur.weight;
    return lex_less(mask, cur.mask);
}

} // namespace qsched::detail
