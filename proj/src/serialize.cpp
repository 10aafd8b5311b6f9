#include "qsched/serialize.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "qsched/errors.hpp"

namespace qsched {

std::string format_double(double v) {
    char buf[64];
    const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{})
        throw NumericalError("failed to format a double");
    return std::string(buf, res.ptr);
}

json instance_to_json(const std::vector<Footprint>& footprints, double threshold) {
    json fps = json::array();
    for (const Footprint& f : footprints) {
        fps.push_back({{"id", f.id},
                       {"x", f.center_x},
                       {"y", f.center_y},
                       {"radius", f.radius},
                       {"weight", f.weight}});
    }
    return json{{"footprints", std::move(fps)}, {"threshold", threshold}};
}

void write_instance_file(const std::filesystem::path& path,
                         const std::vector<Footprint>& footprints, double threshold) {
    write_json_file(path, instance_to_json(footprints, threshold));
}

InstanceFile read_instance_file(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    InstanceFile file;
    try {
        file.threshold = j.at("threshold").get<double>();
        for (const json& fj : j.at("footprints")) {
            Footprint f;
            f.id = fj.at("id").get<int>();
            f.center_x = fj.at("x").get<double>();
            f.center_y = fj.at("y").get<double>();
            f.radius = fj.at("radius").get<double>();
            f.weight = fj.at("weight").get<double>();
            file.footprints.push_back(f);
        }
    } catch (const json::exception& e) {
        throw ConfigError("malformed instance file " + path.string() + ": " + e.what());
    }
    return file;
}

json graph_to_json(const ConflictGraph& graph) {
    json edges = json::array();
    for (const Edge& e : graph.edges())
        edges.push_back({e.hi, e.lo});
    return json{{"n", graph.node_count()}, {"weights", graph.weights()}, {"edges", std::move(edges)}};
}

json hamiltonian_to_json(const DiagonalHamiltonian& h) {
    json linear = json::array();
    for (int k = 0; k < h.qubit_count(); ++k)
        if (h.linear()[k] != 0.0)
            linear.push_back({json(k), json(h.linear()[k])});
    json quadratic = json::array();
    for (const QuadraticTerm& t : h.quadratic())
        if (t.coeff != 0.0)
            quadratic.push_back({json(t.hi), json(t.lo), json(t.coeff)});
    return json{{"n", h.qubit_count()},
                {"constant", h.constant()},
                {"linear", std::move(linear)},
                {"quadratic", std::move(quadratic)}};
}

json report_to_json(const SolveReport& report, bool include_timing) {
    json j{{"method", to_string(report.method)},
           {"bits", report.best.to_string()},
           {"weight", report.weight},
           {"feasible", report.feasible},
           {"metadata", json(report.metadata)}};
    if (include_timing)
        j["elapsed_s"] = report.elapsed_s;
    return j;
}

json probabilities_to_json(const StateVector& state) {
    if (state.qubit_count() > 12)
        throw ContractError("probability dump limited to 12 qubits");
    json j = json::object();
    const std::span<const Amplitude> amps = state.amplitudes();
    for (std::uint64_t m = 0; m < amps.size(); ++m) {
        const double p = amps[m].real() * amps[m].real() + amps[m].imag() * amps[m].imag();
        j[index_to_bitstring(m, state.qubit_count())] = p;
    }
    return j;
}

void write_trace_csv(const std::filesystem::path& path, const std::vector<TracePoint>& trace) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write " + path.string());
    out << "iteration,best_expectation\n";
    for (const TracePoint& tp : trace)
        out << tp.iteration << "," << format_double(tp.best_expectation) << "\n";
    if (!out)
        throw ConfigError("write failed for " + path.string());
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write " + path.string());
    out << j.dump(2) << "\n";
    if (!out)
        throw ConfigError("write failed for " + path.string());
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

} // namespace qsched
