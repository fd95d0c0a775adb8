#include "monopath/rado.hpp"

#include <algorithm>
#include <unordered_set>

namespace monopath {

namespace {

struct Builder {
    const Coloring& coloring;
    const Oracle& oracle;
    const VertexSet& connectorBase;
    std::vector<PathClassSpec> classes;
    std::vector<std::vector<Vertex>> paths;
    std::unordered_set<Vertex> used;

    void markUsed(Vertex v) { used.insert(v); }

    // end-extend path j so its last point becomes `target`
    void extendTo(std::size_t j, Vertex target) {
        auto& path = paths[j];
        Color col = classes[j].color;
        if (path.empty()) {
            path.push_back(target);
            markUsed(target);
            return;
        }
        Vertex last = path.back();
        if (coloring.colorOfPair(last, target) != col) {
            LargenessQuery q;
            q.base = connectorBase;
            q.adjacentTo = {{last, col}, {target, col}};
            q.exclude.assign(used.begin(), used.end());
            q.exclude.push_back(target);
            Vertex u = oracle.freshOrThrow(q, "connector for class " + std::to_string(j));
            path.push_back(u);
            markUsed(u);
        }
        path.push_back(target);
        markUsed(target);
    }

    void run(long long prefix) {
        paths.assign(classes.size(), {});
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (classes[j].start) {
                if (!classes[j].members.contains(*classes[j].start))
                    throw std::invalid_argument("start point outside its class");
                extendTo(j, *classes[j].start);
            }
        }
        for (Vertex v = 0; v < prefix; ++v) {
            // cover phase: the enumerated vertex joins the first class owning it
            std::size_t owner = classes.size();
            for (std::size_t j = 0; j < classes.size(); ++j)
                if (classes[j].members.contains(v)) {
                    owner = j;
                    break;
                }
            if (owner == classes.size()) continue;
            if (!used.count(v)) extendTo(owner, v);
            // target phase: every declared-infinite target set gets a visit
            for (std::size_t j = 0; j < classes.size(); ++j) {
                const auto& t = classes[j].targets;
                if (!t || t->cardinality() == Cardinality::Finite) continue;
                if (!paths[j].empty() && t->contains(paths[j].back())) continue;
                LargenessQuery q;
                q.base = *t;
                q.exclude.assign(used.begin(), used.end());
                Vertex a = oracle.freshOrThrow(q, "target visit for class " + std::to_string(j));
                extendTo(j, a);
            }
        }
    }
};

}  // namespace

std::vector<MonoPowerPath> buildSimultaneousPaths(const Coloring& coloring,
                                                  const std::vector<PathClassSpec>& classes,
                                                  const Oracle& oracle, long long prefix,
                                                  const VertexSet& connectorBase) {
    if (coloring.uniformity() != 2) throw ArityError("path building needs a 2-uniform coloring");
    Builder b{coloring, oracle, connectorBase, classes, {}, {}};
    b.run(prefix);
    std::vector<MonoPowerPath> out;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        MonoPowerPath p;
        p.vertices = std::move(b.paths[j]);
        p.color = classes[j].color;
        p.power = 1;
        p.openEnded = classes[j].members.cardinality() != Cardinality::Finite;
        out.push_back(std::move(p));
    }
    return out;
}

MonoPowerPath coverBySinglePath(const Coloring& coloring, const VertexSet& klass, Color color,
                                const Oracle& oracle, long long prefix) {
    PathClassSpec spec;
    spec.members = klass;
    spec.color = color;
    return buildSimultaneousPaths(coloring, {spec}, oracle, prefix)[0];
}

PartitionResult radoPartitionWithin(const Coloring& coloring, const VertexSet& domain,
                                    long long prefix, const Oracle& oracle) {
    Classification cls = classifyWithin(coloring, domain, prefix, oracle);
    std::vector<PathClassSpec> classes;
    for (Color i = 0; i < coloring.colors(); ++i)
        classes.push_back({cls.classOf(i), i, std::nullopt, std::nullopt});
    auto paths = buildSimultaneousPaths(coloring, classes, oracle, prefix, domain);
    PartitionResult res;
    for (auto& p : paths) res.pieces.emplace_back(std::move(p));
    res.prefix = prefix;
    res.distinctColors = true;
    return res;
}

PartitionResult radoPartition(const Coloring& coloring, long long prefix, const Oracle& oracle) {
    return radoPartitionWithin(coloring, VertexSet::all(), prefix, oracle);
}

}  // namespace monopath
