#include "monopath/classifier.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace monopath {

struct Classification::State {
    Coloring coloring{nullptr};
    VertexSet domain = VertexSet::all();
    Provenance provenance = Provenance::Density;
    long long horizon = 0;
    Color special = 0;

    // exact mode
    std::shared_ptr<const BlockStructure> structure;
    int seat = -1;

    // density mode, pinned per vertex
    mutable std::unordered_map<Vertex, Color> cache;
    mutable std::mutex mu;

    Color classOfVertex(Vertex v) const {
        if (provenance == Provenance::Exact) {
            int b = structure->blockOf(v);
            auto c = structure->patternColor({b, seat});
            if (!c) throw DomainError("vertex without seat edge");
            return *c;
        }
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = cache.find(v);
            if (it != cache.end()) return it->second;
        }
        std::vector<long long> counts(static_cast<std::size_t>(coloring.colors()), 0);
        long long cap = horizon;
        if (auto u = coloring.universe()) cap = std::min(cap, *u);
        for (Vertex w = 0; w < cap; ++w) {
            if (w == v || !domain.contains(w)) continue;
            ++counts[static_cast<std::size_t>(coloring.colorOfPair(v, w))];
        }
        Color best = 0;
        for (Color i = 1; i < coloring.colors(); ++i)
            if (counts[static_cast<std::size_t>(i)] > counts[static_cast<std::size_t>(best)]) best = i;
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(v, best);
        return best;
    }
};

Classification::Classification(std::shared_ptr<State> state) : state_(std::move(state)) {}

Color Classification::vertexClass(Vertex v) const { return state_->classOfVertex(v); }
Color Classification::specialColor() const { return state_->special; }
const VertexSet& Classification::domain() const { return state_->domain; }
Provenance Classification::provenance() const { return state_->provenance; }
long long Classification::horizon() const { return state_->horizon; }

VertexSet Classification::classOf(Color i) const {
    const auto& st = state_;
    if (st->provenance == Provenance::Exact) {
        std::vector<int> keep;
        for (int b : st->domain.partBlocks()) {
            auto c = st->structure->patternColor({b, st->seat});
            if (c && *c == i) keep.push_back(b);
        }
        std::vector<Vertex> plus;
        for (Vertex v : st->domain.partPlus())
            if (st->classOfVertex(v) == i) plus.push_back(v);
        return VertexSet::exactParts(st->domain.name() + "/class" + std::to_string(i),
                                     st->structure, std::move(keep), std::move(plus),
                                     st->domain.partMinus());
    }
    auto self = *this;
    return VertexSet::fromPredicate(
        st->domain.name() + "/class" + std::to_string(i),
        [self, i](Vertex v) { return self.domain().contains(v) && self.vertexClass(v) == i; });
}

std::map<Vertex, Color> Classification::classMapPrefix(long long n) const {
    std::map<Vertex, Color> out;
    for (Vertex v = 0; v < n; ++v)
        if (state_->domain.contains(v)) out[v] = vertexClass(v);
    return out;
}

Classification classifyWithin(const Coloring& coloring, const VertexSet& domain, long long prefix,
                              const Oracle& oracle) {
    if (coloring.uniformity() != 2) throw ArityError("classification needs a 2-uniform coloring");
    auto st = std::make_shared<Classification::State>();
    st->coloring = coloring;
    st->horizon = oracle.horizon();
    if (oracle.exactCapable()) {
        VertexSet d = domain.withStructure(coloring.blocks());
        if (d.isExact() && !d.partBlocks().empty()) {
            const auto structure = coloring.blocks();
            int seat = structure->seatAmong(d.partBlocks());
            if (seat >= 0) {
                st->domain = d;
                st->provenance = Provenance::Exact;
                st->structure = structure;
                st->seat = seat;
                auto c = structure->patternColor({seat, seat});
                st->special = c.value_or(0);
                return Classification(std::move(st));
            }
        }
    }
    st->domain = domain;
    st->provenance = Provenance::Density;
    Classification cls(st);
    // special color: majority class over the classified prefix, ties to the
    // smallest index
    std::vector<long long> counts(static_cast<std::size_t>(coloring.colors()), 0);
    for (Vertex v = 0; v < prefix; ++v)
        if (domain.contains(v)) ++counts[static_cast<std::size_t>(cls.vertexClass(v))];
    Color best = 0;
    for (Color i = 1; i < coloring.colors(); ++i)
        if (counts[static_cast<std::size_t>(i)] > counts[static_cast<std::size_t>(best)]) best = i;
    st->special = best;
    return cls;
}

Classification classify(const Coloring& coloring, long long prefix, const Oracle& oracle) {
    return classifyWithin(coloring, VertexSet::all(), prefix, oracle);
}

OracleResult jointNeighborhood(const Coloring& coloring, const std::vector<Vertex>& F, Color i,
                               const VertexSet& restrictTo, const std::vector<Vertex>& exclude,
                               const Oracle& oracle) {
    (void)coloring;
    LargenessQuery q;
    q.base = restrictTo;
    for (Vertex v : F) q.adjacentTo.emplace_back(v, i);
    q.exclude = exclude;
    return oracle.fresh(q);
}

Color hyperVertexClass(const BlockStructure& st, int k, Vertex v, int seat) {
    std::vector<int> ids(static_cast<std::size_t>(k), seat);
    ids[0] = st.blockOf(v);
    auto c = st.patternColor(std::move(ids));
    if (!c) throw DomainError("vertex without seat hyperedge");
    return *c;
}

}  // namespace monopath
