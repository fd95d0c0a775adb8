#include "monopath/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace monopath {

namespace {

bool sortedContains(const std::vector<Vertex>& v, Vertex x) {
    return std::binary_search(v.begin(), v.end(), x);
}

std::vector<Vertex> sortedUnique(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

VertexSet VertexSet::all() { return VertexSet(); }

VertexSet VertexSet::fromPredicate(std::string name, std::function<bool(Vertex)> pred) {
    VertexSet s;
    s.kind_ = Kind::Pred;
    s.name_ = std::move(name);
    s.pred_ = std::move(pred);
    return s;
}

VertexSet VertexSet::fromList(std::string name, std::vector<Vertex> members) {
    VertexSet s;
    s.kind_ = Kind::List;
    s.name_ = std::move(name);
    s.list_ = sortedUnique(std::move(members));
    return s;
}

VertexSet VertexSet::exactParts(std::string name, std::shared_ptr<const BlockStructure> structure,
                                std::vector<int> blocks, std::vector<Vertex> plus,
                                std::vector<Vertex> minus) {
    VertexSet s;
    s.kind_ = Kind::Parts;
    s.name_ = std::move(name);
    s.structure_ = std::move(structure);
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    s.blocks_ = std::move(blocks);
    s.plus_ = sortedUnique(std::move(plus));
    s.minus_ = sortedUnique(std::move(minus));
    return s;
}

bool VertexSet::contains(Vertex v) const {
    if (v < 0) return false;
    switch (kind_) {
        case Kind::All: return true;
        case Kind::Pred: return pred_(v);
        case Kind::List: return sortedContains(list_, v);
        case Kind::Parts: {
            if (sortedContains(minus_, v)) return false;
            if (sortedContains(plus_, v)) return true;
            int b = structure_->blockOf(v);
            return b >= 0 && std::binary_search(blocks_.begin(), blocks_.end(), b);
        }
    }
    return false;
}

Cardinality VertexSet::cardinality() const {
    switch (kind_) {
        case Kind::All: return Cardinality::Infinite;
        case Kind::Pred: return Cardinality::Unknown;
        case Kind::List: return Cardinality::Finite;
        case Kind::Parts:
            for (int b : blocks_)
                if (!structure_->blocks[static_cast<std::size_t>(b)].finite)
                    return Cardinality::Infinite;
            return Cardinality::Finite;
    }
    return Cardinality::Unknown;
}

const std::string& VertexSet::name() const { return name_; }

std::vector<Vertex> VertexSet::materialize() const {
    if (cardinality() != Cardinality::Finite)
        throw std::logic_error("materialize() on a set not provably finite: " + name_);
    if (kind_ == Kind::List) return list_;
    std::vector<Vertex> out = plus_;
    for (int b : blocks_) {
        const auto& blk = structure_->blocks[static_cast<std::size_t>(b)];
        out.insert(out.end(), blk.members.begin(), blk.members.end());
    }
    out = sortedUnique(std::move(out));
    std::vector<Vertex> kept;
    for (Vertex v : out)
        if (!sortedContains(minus_, v)) kept.push_back(v);
    return kept;
}

VertexSet VertexSet::minus(const std::vector<Vertex>& removed) const {
    if (removed.empty()) return *this;
    auto rm = sortedUnique(removed);
    switch (kind_) {
        case Kind::List: {
            std::vector<Vertex> kept;
            for (Vertex v : list_)
                if (!sortedContains(rm, v)) kept.push_back(v);
            VertexSet s = *this;
            s.list_ = std::move(kept);
            return s;
        }
        case Kind::Parts: {
            VertexSet s = *this;
            std::vector<Vertex> plus;
            for (Vertex v : plus_)
                if (!sortedContains(rm, v)) plus.push_back(v);
            s.plus_ = std::move(plus);
            std::vector<Vertex> m = minus_;
            m.insert(m.end(), rm.begin(), rm.end());
            s.minus_ = sortedUnique(std::move(m));
            return s;
        }
        case Kind::All:
        case Kind::Pred: {
            auto self = *this;
            return fromPredicate(name_ + "\\finite", [self, rm](Vertex v) {
                return !sortedContains(rm, v) && self.contains(v);
            });
        }
    }
    return *this;
}

VertexSet VertexSet::withStructure(std::shared_ptr<const BlockStructure> structure) const {
    if (kind_ != Kind::All || !structure) return *this;
    std::vector<int> ids(structure->blocks.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    return exactParts("all", std::move(structure), std::move(ids));
}

ExhaustedError::ExhaustedError(std::string ctx, std::string query, bool empty)
    : std::runtime_error((empty ? "oracle proved set empty: " : "oracle horizon exhausted: ") + ctx +
                         " [" + query + "]"),
      context(std::move(ctx)),
      queryText(std::move(query)),
      provedEmpty(empty) {}

long long defaultHorizonFor(long long prefix) { return 10 * prefix + 1000; }

Oracle::Oracle(Coloring coloring, OracleMode mode, long long defaultHorizon)
    : coloring_(std::move(coloring)), mode_(mode), defaultHorizon_(defaultHorizon) {
    if (defaultHorizon_ < 1) throw std::invalid_argument("horizon must be >= 1");
}

bool Oracle::exactCapable() const { return mode_ == OracleMode::Exact && coloring_.blocks() != nullptr; }

OracleResult Oracle::fresh(const LargenessQuery& q) const {
    if (exactCapable()) {
        VertexSet base = q.base.withStructure(coloring_.blocks());
        if (base.isExact()) {
            LargenessQuery eq = q;
            eq.base = std::move(base);
            return exact(eq);
        }
    }
    return scan(q);
}

Vertex Oracle::freshOrThrow(const LargenessQuery& q, const std::string& context) const {
    OracleResult res = fresh(q);
    if (res.found()) return res.vertex;
    throw ExhaustedError(context, describeQuery(q), res.status == OracleResult::Status::Empty);
}

OracleResult Oracle::scan(const LargenessQuery& q) const {
    long long horizon = q.horizon > 0 ? q.horizon : defaultHorizon_;
    std::unordered_set<Vertex> banned(q.exclude.begin(), q.exclude.end());
    for (const auto& [v, c] : q.adjacentTo) banned.insert(v);
    long long cap = horizon;
    if (coloring_.universe()) cap = std::min(cap, *coloring_.universe() - 1);
    for (Vertex w = 0; w <= cap; ++w) {
        if (banned.count(w)) continue;
        // pair constraints are cheap; class membership can recurse, so it goes last
        bool ok = true;
        for (const auto& [v, c] : q.adjacentTo) {
            if (coloring_.colorOfPair(v, w) != c) {
                ok = false;
                break;
            }
        }
        if (ok && q.base.contains(w)) return {OracleResult::Status::Found, w};
    }
    // a declared finite universe fully scanned is a proof of emptiness
    if (coloring_.universe() && cap == *coloring_.universe() - 1)
        return {OracleResult::Status::Empty, -1};
    return {OracleResult::Status::Exhausted, -1};
}

OracleResult Oracle::exact(const LargenessQuery& q) const {
    const auto st = coloring_.blocks();
    if (!q.adjacentTo.empty() && coloring_.uniformity() != 2)
        throw std::logic_error("pair constraints need a 2-uniform coloring");
    std::unordered_set<Vertex> banned(q.exclude.begin(), q.exclude.end());
    for (const auto& [v, c] : q.adjacentTo) banned.insert(v);
    for (Vertex v : q.base.partMinus()) banned.insert(v);

    // a block is admissible iff its pattern against every constraint vertex matches
    auto blockAdmissible = [&](int b) {
        for (const auto& [v, c] : q.adjacentTo) {
            int vb = st->blockOf(v);
            if (vb < 0) return false;
            auto col = st->patternColor({vb, b});
            if (!col || *col != c) return false;
        }
        return true;
    };

    Vertex best = std::numeric_limits<Vertex>::max();
    auto consider = [&](Vertex w) {
        if (w >= 0 && w < best && !banned.count(w)) best = w;
    };

    for (int b : q.base.partBlocks()) {
        if (!blockAdmissible(b)) continue;
        const auto& blk = st->blocks[static_cast<std::size_t>(b)];
        if (blk.finite) {
            for (Vertex w : blk.members)
                if (!banned.count(w)) {
                    consider(w);
                    break;
                }
        } else {
            // smallest member of the residue class not banned
            Vertex w = blk.lo + ((blk.rem - blk.lo) % blk.mod + blk.mod) % blk.mod;
            while (banned.count(w)) w += blk.mod;
            consider(w);
        }
    }
    for (Vertex w : q.base.partPlus()) {
        int b = st->blockOf(w);
        if (b >= 0 && blockAdmissible(b)) consider(w);
    }
    if (best == std::numeric_limits<Vertex>::max()) return {OracleResult::Status::Empty, -1};
    return {OracleResult::Status::Found, best};
}

std::string describeQuery(const LargenessQuery& q) {
    std::ostringstream os;
    os << "base=" << q.base.name();
    os << " adjacentTo={";
    for (std::size_t i = 0; i < q.adjacentTo.size(); ++i) {
        if (i) os << ',';
        os << '(' << q.adjacentTo[i].first << ',' << q.adjacentTo[i].second << ')';
    }
    os << "} |exclude|=" << q.exclude.size();
    os << " horizon=" << q.horizon;
    return os.str();
}

}  // namespace monopath
