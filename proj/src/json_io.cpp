#include "monopath/json_io.hpp"

namespace monopath {

using nlohmann::json;

json toJson(const MonoPowerPath& p) {
    return json{{"kind", "power"},
                {"vertices", p.vertices},
                {"color", p.color},
                {"power", p.power},
                {"openEnded", p.openEnded}};
}

json toJson(const TightPiece& p) {
    const char* shape = p.shape == TightPiece::Shape::Path        ? "path"
                        : p.shape == TightPiece::Shape::Cycle     ? "cycle"
                                                                  : "two-way-window";
    return json{{"kind", "tight"},
                {"vertices", p.vertices},
                {"color", p.color},
                {"uniformity", p.uniformity},
                {"shape", shape}};
}

json toJson(const PartitionResult& r) {
    json pieces = json::array();
    for (const auto& p : r.pieces)
        pieces.push_back(std::visit([](const auto& x) { return toJson(x); }, p));
    return json{{"pieces", pieces},
                {"leftover", r.leftover},
                {"prefix", r.prefix},
                {"distinctColors", r.distinctColors}};
}

json toJson(const VerificationReport& r) {
    json v = json::array();
    for (const auto& viol : r.violations) v.push_back(json{{"kind", viol.kind}, {"detail", viol.detail}});
    return json{{"valid", r.ok}, {"violations", v}, {"leftoverSize", r.leftoverSize}};
}

json toJson(const GameTranscript& t) {
    json rounds = json::array();
    for (const auto& mv : t.rounds) rounds.push_back(json{{"adam", mv.adam}, {"bob", mv.bob}});
    json picks = json::array();
    for (const auto& p : t.picks)
        picks.push_back(json{{"row", p.cell.row}, {"level", p.cell.level}, {"vertex", p.vertex}});
    json out{{"rounds", rounds},
             {"picks", picks},
             {"finished", t.finished},
             {"maxRow", t.maxRow},
             {"claimedPath", toJson(t.claimedPath)}};
    if (t.certifiedPrefix)
        out["certifiedPrefix"] = *t.certifiedPrefix;
    else
        out["certifiedPrefix"] = nullptr;
    return out;
}

json toJson(const CounterexampleReport& r) {
    return json{{"twoSquareCover", r.twoSquareCover},
                {"specialCount", r.specialCount},
                {"groupSizes", r.groupSizes},
                {"boundsAvoidingD", r.boundsAvoidingD},
                {"boundsThroughD", r.boundsThroughD},
                {"maxSpecialsOneZeroSquare", r.maxSpecialsOneZeroSquare},
                {"mixedSquaresAreColorOne", r.mixedSquaresAreColorOne},
                {"zeroSquaresEnumerated", r.zeroSquaresEnumerated},
                {"mixedSquaresChecked", r.mixedSquaresChecked},
                {"ok", r.ok()}};
}

json classificationJson(const Classification& c, long long prefix) {
    json dmap = json::object();
    for (const auto& [v, col] : c.classMapPrefix(prefix)) dmap[std::to_string(v)] = col;
    return json{{"dMap", dmap},
                {"specialColor", c.specialColor()},
                {"provenance", c.provenance() == Provenance::Exact ? "exact" : "density"},
                {"horizon", c.horizon()}};
}

json coloringJson(const Coloring& c, long long n) {
    json edges = json::array();
    int k = c.uniformity();
    if (n >= k) {
        std::vector<Vertex> sub(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) sub[static_cast<std::size_t>(i)] = i;
        while (true) {
            json row = json::array();
            for (Vertex v : sub) row.push_back(v);
            row.push_back(c.colorOf(std::span<const Vertex>(sub)));
            edges.push_back(row);
            int i = k - 1;
            while (i >= 0 && sub[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++sub[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return json{{"r", c.colors()}, {"k", k}, {"n", n}, {"edges", edges}};
}

PartitionResult partitionFromJson(const json& j) {
    PartitionResult r;
    r.prefix = j.at("prefix").get<long long>();
    r.leftover = j.value("leftover", std::vector<Vertex>{});
    r.distinctColors = j.value("distinctColors", false);
    for (const auto& pj : j.at("pieces")) {
        std::string kind = pj.at("kind").get<std::string>();
        if (kind == "power") {
            MonoPowerPath p;
            p.vertices = pj.at("vertices").get<std::vector<Vertex>>();
            p.color = pj.at("color").get<Color>();
            p.power = pj.at("power").get<int>();
            p.openEnded = pj.value("openEnded", false);
            r.pieces.emplace_back(std::move(p));
        } else if (kind == "tight") {
            TightPiece p;
            p.vertices = pj.at("vertices").get<std::vector<Vertex>>();
            p.color = pj.at("color").get<Color>();
            p.uniformity = pj.at("uniformity").get<int>();
            std::string shape = pj.value("shape", "path");
            p.shape = shape == "cycle"            ? TightPiece::Shape::Cycle
                      : shape == "two-way-window" ? TightPiece::Shape::TwoWayWindow
                                                  : TightPiece::Shape::Path;
            r.pieces.emplace_back(std::move(p));
        } else {
            throw ParseError("unknown piece kind: " + kind);
        }
    }
    return r;
}

}  // namespace monopath
