#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "qsched/constellation.hpp"
#include "qsched/errors.hpp"

#include "oracles.hpp"

using namespace qsched;

namespace {
constexpr double kPi = std::numbers::pi;

Footprint fp(int id, double x, double y, double r, double w = 1.0) {
    return Footprint{id, x, y, r, w};
}
} // namespace

TEST_CASE("overlap_area: identical unit circles meet in a full disk") {
    const double area = overlap_area(fp(0, 2.0, 3.0, 1.0), fp(1, 2.0, 3.0, 1.0));
    CHECK(area == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("overlap_area: distant circles are disjoint") {
    CHECK(overlap_area(fp(0, 0.0, 0.0, 1.0), fp(1, 10.0, 0.0, 1.0)) == 0.0);
}

TEST_CASE("overlap_area: containment returns the smaller disk") {
    const double area = overlap_area(fp(0, 0.0, 0.0, 3.0), fp(1, 0.5, 0.0, 1.0));
    CHECK(area == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("overlap_area: unit circles at distance 1 match the Monte-Carlo oracle") {
    const Footprint a = fp(0, 0.0, 0.0, 1.0);
    const Footprint b = fp(1, 1.0, 0.0, 1.0);
    const double area = overlap_area(a, b);
    // > 10^7 jittered samples; agreement to 3 decimal places.
    const double mc = oracle::monte_carlo_overlap_area(a, b, 3200, 20240901);
    CHECK(std::abs(area - mc) < 5e-4);
}

TEST_CASE("overlap_area: exact symmetry, monotonicity and bound") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> radius(0.3, 2.5);
    for (int trial = 0; trial < 200; ++trial) {
        const double ra = radius(gen), rb = radius(gen);
        const Footprint a = fp(0, 0.0, 0.0, ra);
        double previous = kPi * std::min(ra, rb) * std::min(ra, rb) + 1.0;
        for (double d = 0.0; d < ra + rb + 0.5; d += 0.05) {
            const Footprint b = fp(1, d, 0.0, rb);
            const double ab = overlap_area(a, b);
            const double ba = overlap_area(b, a);
            CHECK(ab == ba); // bitwise
            CHECK(ab >= 0.0);
            CHECK(ab <= kPi * std::min(ra, rb) * std::min(ra, rb));
            CHECK(ab <= previous);
            previous = ab;
        }
    }
}

TEST_CASE("build_conflict_graph: two disjoint footprints give no edge") {
    const ConflictGraph g =
        build_conflict_graph({fp(0, 0, 0, 1), fp(1, 10, 0, 1)}, OverlapPolicy{0.0});
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("build_conflict_graph: identical footprints exceed a 0.5 threshold") {
    const ConflictGraph g =
        build_conflict_graph({fp(0, 1, 1, 1), fp(1, 1, 1, 1)}, OverlapPolicy{0.5});
    CHECK(g.edges() == std::vector<Edge>{{1, 0}});
}

TEST_CASE("build_conflict_graph: collinear unit circles at 0, 1.5, 3") {
    const std::vector<Footprint> fps{fp(0, 0.0, 0, 1), fp(1, 1.5, 0, 1), fp(2, 3.0, 0, 1)};
    // Fractions straight from overlap_area: adjacent pairs overlap, the outer
    // pair is disjoint.
    CHECK(overlap_fraction(fps[0], fps[1]) > 0.1);
    CHECK(overlap_fraction(fps[1], fps[2]) > 0.1);
    CHECK(overlap_area(fps[0], fps[2]) == 0.0);

    const ConflictGraph g = build_conflict_graph(fps, OverlapPolicy{0.1});
    CHECK(g.edges() == std::vector<Edge>{{1, 0}, {2, 1}});
}

TEST_CASE("build_conflict_graph: duplicate ids rejected") {
    CHECK_THROWS_AS(build_conflict_graph({fp(0, 0, 0, 1), fp(0, 1, 0, 1)}, OverlapPolicy{0.0}),
                    ConfigError);
    CHECK_THROWS_AS(build_conflict_graph({fp(0, 0, 0, 1), fp(2, 1, 0, 1)}, OverlapPolicy{0.0}),
                    ConfigError);
}

TEST_CASE("build_conflict_graph: result independent of input order") {
    std::vector<Footprint> fps = random_constellation(11, 9, 8.0, 0.8, 1.6, 0.5, 5.0);
    const ConflictGraph base = build_conflict_graph(fps, OverlapPolicy{0.2});

    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(fps.begin(), fps.end(), gen);
        const ConflictGraph shuffled = build_conflict_graph(fps, OverlapPolicy{0.2});
        CHECK(shuffled.edges() == base.edges());
        CHECK(shuffled.weights() == base.weights());
    }
}

TEST_CASE("build_conflict_graph: raising the threshold never adds edges") {
    const std::vector<Footprint> fps = random_constellation(5, 12, 6.0, 0.5, 2.0, 1.0, 2.0);
    std::size_t previous = build_conflict_graph(fps, OverlapPolicy{0.0}).edges().size();
    for (double t : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
        const ConflictGraph g = build_conflict_graph(fps, OverlapPolicy{t});
        const auto lower = build_conflict_graph(fps, OverlapPolicy{t / 2}).edges();
        for (const Edge& e : g.edges())
            CHECK(std::find(lower.begin(), lower.end(), e) != lower.end());
        CHECK(g.edges().size() <= previous);
        previous = g.edges().size();
    }
}

TEST_CASE("random_constellation: deterministic per seed") {
    const auto a = random_constellation(99, 8, 10.0, 1.0, 2.0, 0.5, 5.0);
    const auto b = random_constellation(99, 8, 10.0, 1.0, 2.0, 0.5, 5.0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].center_x == b[i].center_x);
        CHECK(a[i].center_y == b[i].center_y);
        CHECK(a[i].radius == b[i].radius);
        CHECK(a[i].weight == b[i].weight);
    }
    const auto ga = build_conflict_graph(a, OverlapPolicy{0.1});
    const auto gb = build_conflict_graph(b, OverlapPolicy{0.1});
    CHECK(ga.edges() == gb.edges());

    const auto other = random_constellation(100, 8, 10.0, 1.0, 2.0, 0.5, 5.0);
    CHECK(other[0].center_x != a[0].center_x);
}

TEST_CASE("random_constellation: single footprint yields an edgeless graph") {
    const auto fps = random_constellation(1, 1, 10.0, 1.0, 2.0, 0.5, 5.0);
    REQUIRE(fps.size() == 1);
    CHECK(build_conflict_graph(fps, OverlapPolicy{0.0}).edge_count() == 0);
}

TEST_CASE("random_constellation: invalid ranges rejected") {
    CHECK_THROWS_AS(random_constellation(1, 0, 10.0, 1.0, 2.0, 0.5, 5.0), ConfigError);
    CHECK_THROWS_AS(random_constellation(1, 4, 10.0, 2.0, 1.0, 0.5, 5.0), ConfigError);
    CHECK_THROWS_AS(random_constellation(1, 4, 10.0, 0.0, 1.0, 0.5, 5.0), ConfigError);
    CHECK_THROWS_AS(random_constellation(1, 4, 10.0, 1.0, 2.0, 5.0, 0.5), ConfigError);
    CHECK_THROWS_AS(random_constellation(1, 4, -1.0, 1.0, 2.0, 0.5, 5.0), ConfigError);
}

TEST_CASE("conflict graph validation") {
    CHECK_THROWS_AS(ConflictGraph(2, {1.0, -1.0}, {}), ConfigError);
    CHECK_THROWS_AS(ConflictGraph(2, {1.0}, {}), ConfigError);
    CHECK_THROWS_AS(ConflictGraph(2, {1.0, 1.0}, {{1, 1}}), ConfigError);
    CHECK_THROWS_AS(ConflictGraph(2, {1.0, 1.0}, {{2, 0}}), ConfigError);
    // Edges are canonicalized and deduplicated.
    const ConflictGraph g(3, {1, 1, 1}, {{0, 2}, {2, 0}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{1, 0}, {2, 0}});
}
