#pragma once

#include <cstdint>
#include <vector>

namespace qsched {

// Circular observation area of one satellite, on a planar map.
// Coordinates and radius are kilometers; weight is the observation value.
struct Footprint {
    int id = 0;
    double center_x = 0.0;
    double center_y = 0.0;
    double radius = 1.0; // > 0
    double weight = 1.0; // > 0
};

// Edge rule: footprints i and j conflict when
//   overlap_area(i, j) / min(area_i, area_j) > threshold   (strict).
// Normalizing by the smaller disk makes full containment fraction 1.
struct OverlapPolicy {
    double threshold = 0.0; // in [0, 1]
};

// Unordered node pair, stored with hi > lo.
struct Edge {
    int hi = 0;
    int lo = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Conflict graph over footprints: one node per footprint, one edge per pair
 * whose overlap fraction exceeds the policy threshold.
 *
 * Invariants enforced at construction: weights positive and sized n, no
 * self-loops, edges canonical (hi > lo), sorted ascending, deduplicated.
 */
class ConflictGraph {
  public:
    ConflictGraph(int n, std::vector<double> weights, std::vector<Edge> edges);

    int node_count() const { return n_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // edge_count / C(n, 2); zero for n < 2.
    double density() const;

    // Per-node neighbor bitmasks. Requires n <= 64.
    std::vector<std::uint64_t> neighbor_masks() const;

    // Per-node adjacency lists, each sorted ascending.
    std::vector<std::vector<int>> adjacency() const;

  private:
    int n_;
    std::vector<double> weights_;
    std::vector<Edge> edges_;
};

// Exact circle-circle intersection area (two circular segments), in km^2.
// Symmetric in its arguments, 0 for disjoint circles, and equal to the
// smaller disk's area when one circle contains the other.
double overlap_area(const Footprint& a, const Footprint& b);

// Overlap fraction in [0, 1]: intersection area / min(area_a, area_b).
double overlap_fraction(const Footprint& a, const Footprint& b);

// Builds the conflict graph for a footprint set. Footprint ids must be
// unique and contiguous from 0 (any input order). Pure function of
// (footprints, policy); input ordering does not affect the result.
ConflictGraph build_conflict_graph(const std::vector<Footprint>& footprints,
                                   const OverlapPolicy& policy);

/**
 * Deterministic random instance generator.
 *
 * Centers are uniform in the square [0, region]^2, radii uniform in
 * [radius_min, radius_max], weights uniform in [weight_min, weight_max].
 * Draw order per footprint: x, y, radius, weight, from a single Rng stream
 * (see rng.hpp for the portability guarantee).
 */
std::vector<Footprint> random_constellation(std::uint64_t seed, int n, double region,
                                            double radius_min, double radius_max,
                                            double weight_min, double weight_max);

} // namespace qsched
