#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monopath/hyper.hpp"
#include "monopath/json_io.hpp"

namespace py = pybind11;
using namespace monopath;

namespace {

Oracle defaultOracle(const Coloring& c, long long prefix, long long horizon) {
    return Oracle(c, OracleMode::Exact, horizon > 0 ? horizon : defaultHorizonFor(prefix));
}

std::string runPartition(const std::string& mode, const std::string& spec, int r, int k,
                         long long prefix, long long horizon, int power) {
    Coloring c = parseColoringSpec(spec, r > 0 ? std::optional<int>(r) : std::nullopt,
                                   k > 0 ? std::optional<int>(k) : std::nullopt);
    Oracle oracle = defaultOracle(c, prefix, horizon);
    PartitionResult res;
    if (mode == "rado")
        res = radoPartition(c, prefix, oracle);
    else if (mode == "tight")
        res = tightPathPartition(c, prefix, oracle);
    else if (mode == "tightcycle")
        res = tightCyclePartition(c, prefix, oracle);
    else if (mode == "power")
        res = powerPartition(c, power, prefix, oracle);
    else if (mode == "squares")
        res = fourSquarePartition(c, prefix, oracle);
    else
        throw std::invalid_argument("unknown mode: " + mode);
    VerificationReport rep = verifyPartition(c, res);
    nlohmann::json j{{"partition", toJson(res)}, {"verification", toJson(rep)}};
    return j.dump();
}

std::string runVerify(const std::string& spec, int r, int k, const std::string& partitionJson) {
    Coloring c = parseColoringSpec(spec, r > 0 ? std::optional<int>(r) : std::nullopt,
                                   k > 0 ? std::optional<int>(k) : std::nullopt);
    PartitionResult res = partitionFromJson(nlohmann::json::parse(partitionJson));
    return toJson(verifyPartition(c, res)).dump();
}

std::string runClassify(const std::string& spec, int r, long long prefix, long long horizon) {
    Coloring c = parseColoringSpec(spec, r > 0 ? std::optional<int>(r) : std::nullopt, std::nullopt);
    Oracle oracle = defaultOracle(c, prefix, horizon);
    return classificationJson(classify(c, prefix, oracle), prefix).dump();
}

}  // namespace

PYBIND11_MODULE(_monopath, m) {
    m.doc() = "partitions of edge-colored infinite complete graphs into monochromatic paths";

    m.def("partition_json", &runPartition, py::arg("mode"), py::arg("coloring"), py::arg("r") = 0,
          py::arg("k") = 0, py::arg("prefix") = 50, py::arg("horizon") = 0, py::arg("power") = 2,
          "Build a partition, verify it, and return the result as a JSON string.");
    m.def("verify_json", &runVerify, py::arg("coloring"), py::arg("r"), py::arg("k"),
          py::arg("partition_json"));
    m.def("classify_json", &runClassify, py::arg("coloring"), py::arg("r") = 0,
          py::arg("prefix") = 50, py::arg("horizon") = 0);
    m.def("counterexample_json", []() { return toJson(counterexampleCheck()).dump(); });
    m.def(
        "color_of",
        [](const std::string& spec, int r, int k, const std::vector<Vertex>& edge) {
            Coloring c = parseColoringSpec(spec, r > 0 ? std::optional<int>(r) : std::nullopt,
                                           k > 0 ? std::optional<int>(k) : std::nullopt);
            return c.colorOf(std::span<const Vertex>(edge));
        },
        py::arg("coloring"), py::arg("r"), py::arg("k"), py::arg("edge"));
    m.def(
        "triangle_order",
        [](long long ell, int k) {
            GridIndex g = triangleOrder(ell, k);
            return std::make_pair(g.row, g.level);
        },
        py::arg("ell"), py::arg("k"));
    m.def(
        "sweep_pokrovskiy",
        [](int n, int k, int samples, std::uint64_t seed) {
            SweepOutcome o = samples > 0 ? sweepPokrovskiySeeded(n, k, samples, seed)
                                         : sweepPokrovskiyExhaustive(n, k);
            return std::make_pair(o.instances, o.alarms);
        },
        py::arg("n"), py::arg("k") = 2, py::arg("samples") = 0, py::arg("seed") = 0);
}
