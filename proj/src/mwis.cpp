#include "qsched/mwis.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <string>

#include "qsched/errors.hpp"

#include "exact_scan.hpp"

namespace qsched {

namespace {

void check_length(const MwisInstance& inst, const Selection& sel, const char* op) {
    if (sel.size() != inst.node_count())
        throw ContractError(std::string(op) + ": selection length " +
                            std::to_string(sel.size()) + " does not match node count " +
                            std::to_string(inst.node_count()));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

Selection Selection::from_mask(std::uint64_t mask, int n) {
    Selection sel;
    sel.bits.resize(n);
    for (int k = 0; k < n; ++k)
        sel.bits[k] = static_cast<std::uint8_t>((mask >> k) & 1);
    return sel;
}

Selection Selection::from_string(const std::string& s) {
    Selection sel;
    sel.bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw ContractError("selection string must contain only 0/1");
        sel.bits.push_back(c == '1' ? 1 : 0);
    }
    return sel;
}

std::uint64_t Selection::to_mask() const {
    if (bits.size() > 64)
        throw ContractError("selection too long for a 64-bit mask");
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k])
            mask |= std::uint64_t{1} << k;
    return mask;
}

std::string Selection::to_string() const {
    std::string s(bits.size(), '0');
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k])
            s[k] = '1';
    return s;
}

bool selection_lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b)
        return false;
    // Bit 0 is the most significant string position, so the lowest differing
    // bit decides; the selection holding 0 there reads smaller.
    const int k = std::countr_zero(a ^ b);
    return ((a >> k) & 1) == 0;
}

std::string to_string(SolveMethod m) {
    switch (m) {
    case SolveMethod::exact: return "exact";
    case SolveMethod::greedy: return "greedy";
    case SolveMethod::qaoa: return "qaoa";
    }
    return "unknown";
}

bool is_independent(const MwisInstance& inst, const Selection& sel) {
    check_length(inst, sel, "is_independent");
    for (const Edge& e : inst.graph.edges()) {
        if (sel.bits[e.hi] && sel.bits[e.lo])
            return false;
    }
    return true;
}

double total_weight(const MwisInstance& inst, const Selection& sel) {
    check_length(inst, sel, "total_weight");
    const std::vector<double>& w = inst.graph.weights();
    double sum = 0.0;
    for (int k = 0; k < inst.node_count(); ++k)
        if (sel.bits[k])
            sum += w[k];
    return sum;
}

double violation_count_weighted(const MwisInstance& inst, const Selection& sel) {
    check_length(inst, sel, "violation_count_weighted");
    const std::vector<double>& w = inst.graph.weights();
    double sum = 0.0;
    for (const Edge& e : inst.graph.edges()) {
        if (sel.bits[e.hi] && sel.bits[e.lo])
            sum += w[e.hi] + w[e.lo];
    }
    return sum;
}

SolveReport solve_exact(const MwisInstance& inst) {
    const int n = inst.node_count();
    if (n > kMaxExactNodes)
        throw SizeLimitError("solve_exact: " + std::to_string(n) + " nodes exceeds the limit of " +
                             std::to_string(kMaxExactNodes));
    const auto t0 = std::chrono::steady_clock::now();

    const std::vector<std::uint64_t> adjacency = inst.graph.neighbor_masks();
    const std::vector<double>& weights = inst.graph.weights();
    const std::int64_t total = std::int64_t{1} << n;

    detail::BestSelection best;
#pragma omp parallel if (total >= 4096)
    {
        detail::BestSelection local;
#pragma omp for schedule(static) nowait
        for (std::int64_t m = 0; m < total; ++m) {
            const std::uint64_t mask = static_cast<std::uint64_t>(m);
            if (!detail::mask_independent(adjacency, mask))
                continue;
            const double w = detail::mask_weight(weights, mask);
            if (detail::beats(w, mask, local, selection_lex_less)) {
                local.weight = w;
                local.mask = mask;
            }
        }
#pragma omp critical(qsched_solve_exact_merge)
        {
            if (detail::beats(local.weight, local.mask, best, selection_lex_less))
                best = local;
        }
    }

    SolveReport report;
    report.best = Selection::from_mask(best.mask, n);
    report.weight = best.weight;
    report.feasible = true;
    report.method = SolveMethod::exact;
    report.elapsed_s = seconds_since(t0);
    report.metadata["search_space"] = static_cast<double>(total);
    return report;
}

SolveReport solve_greedy(const MwisInstance& inst) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = inst.node_count();
    const std::vector<double>& weights = inst.graph.weights();
    const std::vector<std::vector<int>> adjacency = inst.graph.adjacency();

    std::vector<char> alive(n, 1);
    std::vector<int> degree(n, 0);
    for (int k = 0; k < n; ++k)
        degree[k] = static_cast<int>(adjacency[k].size());

    Selection sel = Selection::zeros(n);
    int remaining = n;
    while (remaining > 0) {
        // Highest weight / (remaining degree + 1); ties toward the smaller index.
        int pick = -1;
        double pick_score = 0.0;
        for (int k = 0; k < n; ++k) {
            if (!alive[k])
                continue;
            const double score = weights[k] / (degree[k] + 1.0);
            if (pick < 0 || score > pick_score) {
                pick = k;
                pick_score = score;
            }
        }
        sel.bits[pick] = 1;

        auto remove_node = [&](int v) {
            alive[v] = 0;
            --remaining;
            for (int u : adjacency[v])
                if (alive[u])
                    --degree[u];
        };
        remove_node(pick);
        for (int u : adjacency[pick])
            if (alive[u])
                remove_node(u);
    }

    SolveReport report;
    report.best = sel;
    report.weight = total_weight(inst, sel);
    report.feasible = true;
    report.method = SolveMethod::greedy;
    report.elapsed_s = seconds_since(t0);
    return report;
}

} // namespace qsched
