#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qsched/errors.hpp"
#include "qsched/serialize.hpp"

#include "oracles.hpp"

using namespace qsched;
namespace fs = std::filesystem;

namespace {
fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("qsched_serialize_" + name);
}
} // namespace

TEST_CASE("format_double round-trips exact values") {
    for (double v : {0.0, 1.0, -0.5, 1.0 / 3.0, 3.141592653589793, 1e-17, 12345.678901234567}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("instance file round-trip") {
    const std::vector<Footprint> fps = random_constellation(4, 6, 10.0, 1.0, 2.0, 0.5, 5.0);
    const fs::path path = temp_file("instance.json");
    write_instance_file(path, fps, 0.25);

    const InstanceFile file = read_instance_file(path);
    CHECK(file.threshold == 0.25);
    REQUIRE(file.footprints.size() == fps.size());
    for (std::size_t i = 0; i < fps.size(); ++i) {
        CHECK(file.footprints[i].id == fps[i].id);
        CHECK(file.footprints[i].center_x == fps[i].center_x);
        CHECK(file.footprints[i].center_y == fps[i].center_y);
        CHECK(file.footprints[i].radius == fps[i].radius);
        CHECK(file.footprints[i].weight == fps[i].weight);
    }
    fs::remove(path);
}

TEST_CASE("malformed instance files raise config errors") {
    const fs::path path = temp_file("bad.json");
    {
        std::ofstream out(path);
        out << "{\"footprints\": [{\"id\": 0}]}";
    }
    CHECK_THROWS_AS(read_instance_file(path), ConfigError);
    {
        std::ofstream out(path);
        out << "not json";
    }
    CHECK_THROWS_AS(read_instance_file(path), ConfigError);
    fs::remove(path);
    CHECK_THROWS_AS(read_instance_file(temp_file("missing.json")), ConfigError);
}

TEST_CASE("graph export lists edges with the larger index first") {
    const ConflictGraph g(3, {1.0, 2.0, 3.0}, {{1, 0}, {2, 1}});
    const json j = graph_to_json(g);
    CHECK(j.at("n") == 3);
    CHECK(j.at("weights") == json::array({1.0, 2.0, 3.0}));
    CHECK(j.at("edges") == json::array({json::array({1, 0}), json::array({2, 1})}));
}

TEST_CASE("hamiltonian dump omits zero coefficients") {
    const MwisInstance inst{ConflictGraph(3, {1.0, 1.0, 2.0}, {{2, 1}})};
    const json j = hamiltonian_to_json(build_problem(inst, PenaltyRate(2.0)));
    CHECK(j.at("n") == 3);
    CHECK(j.at("constant") == 0.0);
    // Node 0 keeps w/2 = 0.5; nodes 1 and 2 mix objective and penalty parts.
    CHECK(j.at("linear")[0] == json::array({0, 0.5}));
    CHECK(j.at("quadratic").size() == 1);
    CHECK(j.at("quadratic")[0][0] == 2);
    CHECK(j.at("quadratic")[0][1] == 1);
}

TEST_CASE("report serialization with and without timing") {
    SolveReport report;
    report.best = Selection::from_string("0101");
    report.weight = 3.5;
    report.feasible = true;
    report.method = SolveMethod::qaoa;
    report.elapsed_s = 0.125;
    report.metadata["shots"] = 4096.0;

    const json with = report_to_json(report, true);
    CHECK(with.at("elapsed_s") == 0.125);
    const json without = report_to_json(report, false);
    CHECK(!without.contains("elapsed_s"));
    CHECK(without.at("method") == "qaoa");
    CHECK(without.at("bits") == "0101");
    CHECK(without.at("weight") == 3.5);
    CHECK(without.at("feasible") == true);
    CHECK(without.at("metadata").at("shots") == 4096.0);
}

TEST_CASE("probability dump covers every basis state and sums to one") {
    const MwisInstance inst = oracle::random_graph_instance(3, 4, 0.5);
    QaoaParams params;
    params.gammas = {0.3};
    params.betas = {0.9};
    const StateVector state = evolve(inst, PenaltyRate(2.0), params);
    const json j = probabilities_to_json(state);
    CHECK(j.size() == 16);
    double sum = 0.0;
    for (const auto& [key, value] : j.items()) {
        CHECK(key.size() == 4);
        sum += value.get<double>();
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("json files serialize byte-identically for equal content") {
    const json j{{"b", 1.0 / 3.0}, {"a", json::array({1, 2, 3})}};
    const fs::path p1 = temp_file("a.json");
    const fs::path p2 = temp_file("b.json");
    write_json_file(p1, j);
    write_json_file(p2, j);
    std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
    const std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    const std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK(!s1.empty());
    fs::remove(p1);
    fs::remove(p2);
}
