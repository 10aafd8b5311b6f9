#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsched/constellation.hpp"
#include "qsched/hamiltonian.hpp"
#include "qsched/mwis.hpp"
#include "qsched/qaoa.hpp"
#include "qsched/state_vector.hpp"

namespace qsched {

using json = nlohmann::json;

// Shortest decimal string that round-trips the exact double value.
std::string format_double(double v);

// Instance file: { "footprints": [{id,x,y,radius,weight}...], "threshold": t }.
json instance_to_json(const std::vector<Footprint>& footprints, double threshold);
void write_instance_file(const std::filesystem::path& path,
                         const std::vector<Footprint>& footprints, double threshold);

struct InstanceFile {
    std::vector<Footprint> footprints;
    double threshold = 0.0;
};

InstanceFile read_instance_file(const std::filesystem::path& path);

// Graph export: { "n", "weights": [...], "edges": [[i, j]...] } with i > j.
json graph_to_json(const ConflictGraph& graph);

// Debug dump: { "n", "constant", "linear": [[k, c]...], "quadratic": [[i, j, c]...] },
// zero coefficients omitted, ascending order.
json hamiltonian_to_json(const DiagonalHamiltonian& h);

// { "method", "bits", "weight", "feasible", "metadata" } plus "elapsed_s"
// when include_timing is set. CLI report files exclude timing so repeated
// runs are byte-identical; elapsed goes to the run-meta sidecar instead.
json report_to_json(const SolveReport& report, bool include_timing);

// Final-state probabilities keyed by bitstring, for plotting (n <= 12).
json probabilities_to_json(const StateVector& state);

// CSV with header "iteration,best_expectation".
void write_trace_csv(const std::filesystem::path& path, const std::vector<TracePoint>& trace);

// Serializes with a fixed 2-space indent and writes atomically enough for
// the CLI's byte-identity guarantee (same content -> same bytes).
void write_json_file(const std::filesystem::path& path, const json& j);

json read_json_file(const std::filesystem::path& path);

} // namespace qsched
