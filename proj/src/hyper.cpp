#include "monopath/hyper.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

namespace monopath {

namespace {

// visit every size-`want` subset of `pool` (by index order)
template <typename F>
bool forEachSubset(const std::vector<Vertex>& pool, int want, const F& fn) {
    if (want == 0) return fn(std::vector<Vertex>{});
    if (static_cast<int>(pool.size()) < want) return true;
    std::vector<std::size_t> idx(static_cast<std::size_t>(want));
    for (int i = 0; i < want; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    while (true) {
        std::vector<Vertex> sub;
        sub.reserve(static_cast<std::size_t>(want));
        for (auto i : idx) sub.push_back(pool[i]);
        if (!fn(sub)) return false;
        int p = want - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == pool.size() - static_cast<std::size_t>(want - p)) --p;
        if (p < 0) return true;
        ++idx[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < want; ++q)
            idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
}

}  // namespace

RamseyCertificate ramseyExtract(const DerivedColoring& derived, const VertexSet& within,
                                int targetSize, long long horizon) {
    if (targetSize < 1) throw std::invalid_argument("targetSize must be >= 1");
    std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(derived.colors));
    for (Vertex w = 0; w <= horizon; ++w) {
        if (!within.contains(w)) continue;
        for (Color t = 0; t < derived.colors; ++t) {
            auto& s = sets[static_cast<std::size_t>(t)];
            bool fits = forEachSubset(s, derived.arity - 1, [&](std::vector<Vertex> x) {
                x.push_back(w);
                std::sort(x.begin(), x.end());
                return derived.colorOf(std::span<const Vertex>(x)) == t;
            });
            if (!fits) continue;
            s.push_back(w);
            if (static_cast<int>(s.size()) >= targetSize) {
                RamseyCertificate cert{s, t, "greedy homogeneous extraction"};
                if (!recheckCertificate(derived, cert))
                    throw std::logic_error("homogeneous certificate failed its exhaustive recheck");
                return cert;
            }
        }
    }
    throw ExhaustedError("homogeneous set of size " + std::to_string(targetSize),
                         "within=" + within.name() + " horizon=" + std::to_string(horizon), false);
}

bool recheckCertificate(const DerivedColoring& derived, const RamseyCertificate& cert) {
    std::vector<Vertex> pool = cert.homogeneousSet;
    std::sort(pool.begin(), pool.end());
    return forEachSubset(pool, derived.arity, [&](const std::vector<Vertex>& x) {
        return derived.colorOf(std::span<const Vertex>(x)) == cert.color;
    });
}

namespace {

// Backtracking splice: find `count` fresh vertices so that appending them
// (and then `target`, when given) after `context` makes every window that
// becomes complete take the given color. Candidates ascend, so the result is
// the lexicographically least splice.
class SpliceSearch {
public:
    SpliceSearch(const Coloring& coloring, Color color, int k, std::vector<Vertex> context,
                 std::optional<Vertex> target, int count,
                 std::function<bool(Vertex)> fresh, long long horizon)
        : coloring_(coloring),
          color_(color),
          k_(k),
          context_(std::move(context)),
          target_(target),
          count_(count),
          fresh_(std::move(fresh)),
          horizon_(horizon) {}

    std::optional<std::vector<Vertex>> run() {
        chosen_.clear();
        budget_ = 200000;
        if (dfs()) return chosen_;
        return std::nullopt;
    }

private:
    bool windowEndingAt(Vertex w) const {
        std::size_t need = static_cast<std::size_t>(k_) - 1;
        std::vector<Vertex> win;
        win.reserve(need + 1);
        for (auto it = chosen_.rbegin(); it != chosen_.rend() && win.size() < need; ++it)
            win.push_back(*it);
        for (auto it = context_.rbegin(); it != context_.rend() && win.size() < need; ++it)
            win.push_back(*it);
        if (win.size() < need) return true;
        win.push_back(w);
        return coloring_.colorOf(std::span<const Vertex>(win)) == color_;
    }

    bool dfs() {
        if (static_cast<int>(chosen_.size()) == count_) {
            if (!target_) return true;
            return windowEndingAt(*target_);
        }
        for (Vertex w = 0; w <= horizon_; ++w) {
            if (--budget_ < 0) return false;
            if (!fresh_(w)) continue;
            if (std::find(chosen_.begin(), chosen_.end(), w) != chosen_.end()) continue;
            if (target_ && w == *target_) continue;
            if (!windowEndingAt(w)) continue;
            chosen_.push_back(w);
            if (dfs()) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const Coloring& coloring_;
    Color color_;
    int k_;
    std::vector<Vertex> context_;
    std::optional<Vertex> target_;
    int count_;
    std::function<bool(Vertex)> fresh_;
    long long horizon_;
    std::vector<Vertex> chosen_;
    long long budget_ = 0;
};

DerivedColoring linkColoring(const Coloring& coloring, Vertex v) {
    DerivedColoring d;
    d.arity = coloring.uniformity() - 1;
    d.colors = coloring.colors();
    d.colorOf = [&coloring, v](std::span<const Vertex> x) {
        std::vector<Vertex> e(x.begin(), x.end());
        e.push_back(v);
        std::sort(e.begin(), e.end());
        return coloring.colorOf(std::span<const Vertex>(e));
    };
    return d;
}

}  // namespace

PartitionResult tightPathPartition(const Coloring& coloring, long long prefix,
                                   const Oracle& oracle) {
    int k = coloring.uniformity();
    std::map<Color, std::vector<Vertex>> paths;
    std::unordered_set<Vertex> used;
    long long horizon = oracle.horizon();

    for (Vertex v = 0; v < prefix; ++v) {
        if (used.count(v)) continue;
        // the suggested color: greedy homogeneous extraction for the link of v
        DerivedColoring d = linkColoring(coloring, v);
        const auto& usedRef = used;
        VertexSet fresh = VertexSet::fromPredicate(
            "fresh", [&usedRef, v](Vertex w) { return w != v && !usedRef.count(w); });
        RamseyCertificate cert = ramseyExtract(d, fresh, std::max(1, k - 1), horizon);
        Color t = cert.color;
        auto it = paths.find(t);
        if (it == paths.end()) {
            paths[t] = {v};
            used.insert(v);
            continue;
        }
        // splice k-1 connectors so every new window of P_t comes out color t
        auto freshFn = [&usedRef, v](Vertex w) { return w != v && !usedRef.count(w); };
        SpliceSearch search(coloring, t, k, it->second, v, k - 1, freshFn, horizon);
        auto ws = search.run();
        if (!ws)
            throw ExhaustedError("tight-path splice for vertex " + std::to_string(v),
                                 "color=" + std::to_string(t) + " horizon=" + std::to_string(horizon),
                                 false);
        for (Vertex w : *ws) {
            it->second.push_back(w);
            used.insert(w);
        }
        it->second.push_back(v);
        used.insert(v);
        // machine check after every absorption: the grown path still verifies
        TightPiece probe{it->second, t, k, TightPiece::Shape::Path};
        if (!verifyTight(coloring, probe).ok)
            throw std::logic_error("tight path failed verification after absorbing " +
                                   std::to_string(v));
    }

    PartitionResult out;
    out.prefix = prefix;
    out.distinctColors = true;
    for (const auto& [t, vs] : paths) {
        TightPiece p;
        p.vertices = vs;
        p.color = t;
        p.uniformity = k;
        p.shape = TightPiece::Shape::Path;
        out.pieces.emplace_back(std::move(p));
    }
    return out;
}

namespace {

struct WindowBuilder {
    // grows ... x[-1] Y[-1] x[0] Y[0] x[1] ... symmetrically
    std::deque<Vertex> seq;
    bool growRight = true;
};

}  // namespace

PartitionResult tightCyclePartition(const Coloring& coloring, long long prefix,
                                    const Oracle& oracle) {
    int k = coloring.uniformity();
    int r = coloring.colors();
    PartitionResult out;
    out.prefix = prefix;
    out.distinctColors = true;
    if (prefix <= 0) return out;

    std::unordered_set<Vertex> used;
    long long horizon = oracle.horizon();

    if (oracle.exactCapable()) {
        const auto st = coloring.blocks();
        int seat = st->seatBlock();
        // classes as block unions: provably finite ones get cycles
        std::vector<std::vector<int>> classBlocks(static_cast<std::size_t>(r));
        for (int b = 0; b < static_cast<int>(st->blocks.size()); ++b) {
            std::vector<int> ids(static_cast<std::size_t>(k), seat);
            ids[0] = b;
            auto c = st->patternColor(std::move(ids));
            if (c) classBlocks[static_cast<std::size_t>(*c)].push_back(b);
        }
        auto classSet = [&](Color i) {
            return VertexSet::exactParts("class" + std::to_string(i), st,
                                         classBlocks[static_cast<std::size_t>(i)]);
        };
        VertexSet seatSet = VertexSet::exactParts("seat", st, {seat});
        auto freshSeat = [&](const char* what) {
            LargenessQuery q;
            q.base = seatSet;
            q.exclude.assign(used.begin(), used.end());
            return oracle.freshOrThrow(q, what);
        };

        // finite classes become tight cycles x0 Y0 x1 Y1 ...
        for (Color i = 0; i < r; ++i) {
            VertexSet cls = classSet(i);
            if (cls.cardinality() != Cardinality::Finite) continue;
            std::vector<Vertex> xs;
            for (Vertex v : cls.materialize())
                if (!used.count(v)) xs.push_back(v);
            if (xs.empty()) continue;
            for (Vertex x : xs) used.insert(x);
            TightPiece piece;
            piece.color = i;
            piece.uniformity = k;
            piece.shape = TightPiece::Shape::Cycle;
            for (Vertex x : xs) {
                piece.vertices.push_back(x);
                for (int t = 0; t < k - 1; ++t) {
                    Vertex y = freshSeat("cycle filler");
                    used.insert(y);
                    piece.vertices.push_back(y);
                }
            }
            out.pieces.emplace_back(std::move(piece));
        }
        // infinite classes become two-way windows
        for (Color i = 0; i < r; ++i) {
            VertexSet cls = classSet(i);
            if (cls.cardinality() == Cardinality::Finite) continue;
            WindowBuilder wb;
            auto nextTarget = [&]() -> std::optional<Vertex> {
                for (Vertex v = 0; v < prefix; ++v)
                    if (cls.contains(v) && !used.count(v)) return v;
                return std::nullopt;
            };
            while (auto tgt = nextTarget()) {
                Vertex x = *tgt;
                used.insert(x);
                if (wb.seq.empty()) {
                    wb.seq.push_back(x);
                    continue;
                }
                std::vector<Vertex> cell;
                for (int t = 0; t < k - 1; ++t) {
                    Vertex y = freshSeat("window filler");
                    used.insert(y);
                    cell.push_back(y);
                }
                if (wb.growRight) {
                    for (Vertex y : cell) wb.seq.push_back(y);
                    wb.seq.push_back(x);
                } else {
                    for (Vertex y : cell) wb.seq.push_front(y);
                    wb.seq.push_front(x);
                }
                wb.growRight = !wb.growRight;
            }
            if (wb.seq.empty()) continue;
            TightPiece piece;
            piece.color = i;
            piece.uniformity = k;
            piece.shape = TightPiece::Shape::TwoWayWindow;
            piece.vertices.assign(wb.seq.begin(), wb.seq.end());
            out.pieces.emplace_back(std::move(piece));
        }
        return out;
    }

    // scan oracles cannot certify finiteness: every class is treated as
    // infinite and only window pieces are produced
    std::vector<Color> classOf(static_cast<std::size_t>(prefix), 0);
    for (Vertex v = 0; v < prefix; ++v) {
        DerivedColoring d = linkColoring(coloring, v);
        VertexSet others =
            VertexSet::fromPredicate("others", [v](Vertex w) { return w != v; });
        classOf[static_cast<std::size_t>(v)] = ramseyExtract(d, others, std::max(1, k - 1), horizon).color;
    }
    for (Color i = 0; i < r; ++i) {
        WindowBuilder wb;
        const auto& usedRef = used;
        auto freshFn = [&usedRef](Vertex w) { return !usedRef.count(w); };
        for (Vertex v = 0; v < prefix; ++v) {
            if (classOf[static_cast<std::size_t>(v)] != i || used.count(v)) continue;
            Vertex x = v;
            used.insert(x);
            if (wb.seq.empty()) {
                wb.seq.push_back(x);
                continue;
            }
            std::vector<Vertex> context;
            if (wb.growRight)
                context.assign(wb.seq.begin(), wb.seq.end());
            else
                context.assign(wb.seq.rbegin(), wb.seq.rend());
            SpliceSearch search(coloring, i, k, std::move(context), x, k - 1, freshFn, horizon);
            auto cell = search.run();
            if (!cell)
                throw ExhaustedError("window splice for vertex " + std::to_string(x),
                                     "color=" + std::to_string(i), false);
            for (Vertex y : *cell) used.insert(y);
            if (wb.growRight) {
                for (Vertex y : *cell) wb.seq.push_back(y);
                wb.seq.push_back(x);
            } else {
                for (Vertex y : *cell) wb.seq.push_front(y);
                wb.seq.push_front(x);
            }
            wb.growRight = !wb.growRight;
        }
        if (wb.seq.empty()) continue;
        TightPiece piece;
        piece.color = i;
        piece.uniformity = k;
        piece.shape = TightPiece::Shape::TwoWayWindow;
        piece.vertices.assign(wb.seq.begin(), wb.seq.end());
        out.pieces.emplace_back(std::move(piece));
    }
    return out;
}

}  // namespace monopath
