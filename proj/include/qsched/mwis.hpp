#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsched/constellation.hpp"

namespace qsched {

// Maximum-weight-independent-set instance: pick nodes of the conflict graph,
// no two adjacent, maximizing total node weight.
struct MwisInstance {
    ConflictGraph graph;

    int node_count() const { return graph.node_count(); }
};

/**
 * A 0/1 schedule indicator per node; bit k selects node k.
 *
 * String form reads node 0 first ("bits[0] bits[1] ..."), and the packed
 * mask form puts bit k at binary digit k (bit 0 least significant). All
 * lexicographic tie-breaking in this library compares the string form,
 * i.e. bit 0 is the most significant position.
 */
struct Selection {
    std::vector<std::uint8_t> bits;

    static Selection zeros(int n) { return Selection{std::vector<std::uint8_t>(n, 0)}; }
    static Selection from_mask(std::uint64_t mask, int n);
    static Selection from_string(const std::string& s);

    int size() const { return static_cast<int>(bits.size()); }
    std::uint64_t to_mask() const; // requires size() <= 64
    std::string to_string() const;

    friend bool operator==(const Selection&, const Selection&) = default;
};

// True when a precedes b in the library's lexicographic order (bit 0 most
// significant). Both masks must describe selections of equal length.
bool selection_lex_less(std::uint64_t a, std::uint64_t b);

enum class SolveMethod { exact, greedy, qaoa };

std::string to_string(SolveMethod m);

struct SolveReport {
    Selection best;
    double weight = 0.0;
    bool feasible = false;
    SolveMethod method = SolveMethod::exact;
    double elapsed_s = 0.0;
    // Method-specific numeric fields (e.g. qaoa expectation, shot count).
    std::map<std::string, double> metadata;
};

// True iff no edge has both endpoints selected.
bool is_independent(const MwisInstance& inst, const Selection& sel);

// Sum of weights of selected nodes, accumulated in ascending node order.
double total_weight(const MwisInstance& inst, const Selection& sel);

// Weighted count of conflicting selections: sum over edges (i, j) of
// (w_i + w_j) * bits_i * bits_j. Zero iff the selection is independent.
double violation_count_weighted(const MwisInstance& inst, const Selection& sel);

/**
 * Brute-force optimum over all 2^n selections; n <= 24.
 *
 * The winner is the maximum under (weight desc, lexicographic asc), which is
 * a total order, so the search space may be partitioned across threads while
 * returning exactly the sequential scan's answer.
 */
SolveReport solve_exact(const MwisInstance& inst);

// Greedy baseline: repeatedly take the remaining node maximizing
// weight / (remaining_degree + 1) (ties toward the smaller index), then
// discard it and its neighbors. Always returns a feasible selection.
SolveReport solve_greedy(const MwisInstance& inst);

// Largest instance the exact solver and state-vector paths accept.
inline constexpr int kMaxExactNodes = 24;

} // namespace qsched
