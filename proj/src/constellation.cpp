#include "qsched/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsched/errors.hpp"
#include "qsched/rng.hpp"

namespace qsched {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_footprint(const Footprint& f) {
    if (!(f.radius > 0.0) || !std::isfinite(f.radius))
        throw ConfigError("footprint " + std::to_string(f.id) + ": radius must be > 0");
    if (!(f.weight > 0.0) || !std::isfinite(f.weight))
        throw ConfigError("footprint " + std::to_string(f.id) + ": weight must be > 0");
    if (!std::isfinite(f.center_x) || !std::isfinite(f.center_y))
        throw ConfigError("footprint " + std::to_string(f.id) + ": non-finite center");
}

} // namespace

ConflictGraph::ConflictGraph(int n, std::vector<double> weights, std::vector<Edge> edges)
    : n_(n), weights_(std::move(weights)), edges_(std::move(edges)) {
    if (n_ < 1)
        throw ConfigError("conflict graph needs at least one node");
    if (static_cast<int>(weights_.size()) != n_)
        throw ConfigError("conflict graph: weight count does not match node count");
    for (int k = 0; k < n_; ++k) {
        if (!(weights_[k] > 0.0) || !std::isfinite(weights_[k]))
            throw ConfigError("conflict graph: weight of node " + std::to_string(k) +
                              " must be > 0");
    }
    for (Edge& e : edges_) {
        if (e.hi < e.lo)
            std::swap(e.hi, e.lo);
        if (e.hi == e.lo)
            throw ConfigError("conflict graph: self-loop on node " + std::to_string(e.hi));
        if (e.lo < 0 || e.hi >= n_)
            throw ConfigError("conflict graph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

double ConflictGraph::density() const {
    if (n_ < 2)
        return 0.0;
    return static_cast<double>(edges_.size()) / (0.5 * n_ * (n_ - 1));
}

std::vector<std::uint64_t> ConflictGraph::neighbor_masks() const {
    if (n_ > 64)
        throw ContractError("neighbor_masks supports at most 64 nodes");
    std::vector<std::uint64_t> adj(n_, 0);
    for (const Edge& e : edges_) {
        adj[e.hi] |= std::uint64_t{1} << e.lo;
        adj[e.lo] |= std::uint64_t{1} << e.hi;
    }
    return adj;
}

std::vector<std::vector<int>> ConflictGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.hi].push_back(e.lo);
        adj[e.lo].push_back(e.hi);
    }
    for (auto& row : adj)
        std::sort(row.begin(), row.end());
    return adj;
}

double overlap_area(const Footprint& a, const Footprint& b) {
    // Canonicalizing to (rmin, rmax) makes the result exactly symmetric in
    // the argument order.
    const double rmin = std::min(a.radius, b.radius);
    const double rmax = std::max(a.radius, b.radius);
    const double dx = a.center_x - b.center_x;
    const double dy = a.center_y - b.center_y;
    const double d2 = dx * dx + dy * dy;
    const double d = std::sqrt(d2);

    const double small_area = kPi * rmin * rmin;
    if (d >= rmin + rmax)
        return 0.0;
    if (d <= rmax - rmin)
        return small_area; // smaller disk fully contained

    // Two circular segments cut by the chord through the intersection points.
    const double cos_min = std::clamp((d2 + rmin * rmin - rmax * rmax) / (2.0 * d * rmin), -1.0, 1.0);
    const double cos_max = std::clamp((d2 + rmax * rmax - rmin * rmin) / (2.0 * d * rmax), -1.0, 1.0);
    const double seg_min = rmin * rmin * std::acos(cos_min);
    const double seg_max = rmax * rmax * std::acos(cos_max);
    const double heron = (rmin + rmax - d) * (d + rmin - rmax) * (d - rmin + rmax) * (d + rmin + rmax);
    const double triangles = 0.5 * std::sqrt(std::max(0.0, heron));

    return std::clamp(seg_min + seg_max - triangles, 0.0, small_area);
}

double overlap_fraction(const Footprint& a, const Footprint& b) {
    const double rmin = std::min(a.radius, b.radius);
    const double small_area = kPi * rmin * rmin;
    return std::clamp(overlap_area(a, b) / small_area, 0.0, 1.0);
}

ConflictGraph build_conflict_graph(const std::vector<Footprint>& footprints,
                                   const OverlapPolicy& policy) {
    const int n = static_cast<int>(footprints.size());
    if (n < 1)
        throw ConfigError("constellation needs at least one footprint");
    if (!(policy.threshold >= 0.0) || !(policy.threshold <= 1.0))
        throw ConfigError("overlap threshold must lie in [0, 1]");

    // Order by id so the graph does not depend on the input ordering.
    std::vector<const Footprint*> by_id(n, nullptr);
    for (const Footprint& f : footprints) {
        validate_footprint(f);
        if (f.id < 0 || f.id >= n)
            throw ConfigError("footprint ids must be contiguous from 0; got id " +
                              std::to_string(f.id) + " with " + std::to_string(n) + " footprints");
        if (by_id[f.id] != nullptr)
            throw ConfigError("duplicate footprint id " + std::to_string(f.id));
        by_id[f.id] = &f;
    }

    std::vector<double> weights(n);
    for (int k = 0; k < n; ++k)
        weights[k] = by_id[k]->weight;

    std::vector<Edge> edges;
    for (int hi = 1; hi < n; ++hi) {
        for (int lo = 0; lo < hi; ++lo) {
            if (overlap_fraction(*by_id[hi], *by_id[lo]) > policy.threshold)
                edges.push_back({hi, lo});
        }
    }
    return ConflictGraph(n, std::move(weights), std::move(edges));
}

std::vector<Footprint> random_constellation(std::uint64_t seed, int n, double region,
                                            double radius_min, double radius_max,
                                            double weight_min, double weight_max) {
    if (n < 1)
        throw ConfigError("random_constellation: n must be >= 1");
    if (!(region > 0.0))
        throw ConfigError("random_constellation: region side must be > 0");
    if (!(radius_min > 0.0) || !(radius_min <= radius_max))
        throw ConfigError("random_constellation: need 0 < radius_min <= radius_max");
    if (!(weight_min > 0.0) || !(weight_min <= weight_max))
        throw ConfigError("random_constellation: need 0 < weight_min <= weight_max");

    Rng rng(seed);
    std::vector<Footprint> footprints;
    footprints.reserve(n);
    for (int id = 0; id < n; ++id) {
        Footprint f;
        f.id = id;
        f.center_x = rng.uniform(0.0, region);
        f.center_y = rng.uniform(0.0, region);
        f.radius = rng.uniform(radius_min, radius_max);
        f.weight = rng.uniform(weight_min, weight_max);
        footprints.push_back(f);
    }
    return footprints;
}

} // namespace qsched
