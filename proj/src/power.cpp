#include "monopath/power.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace monopath {

std::vector<int> SetTree::leafIds() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (static_cast<int>(nodes[static_cast<std::size_t>(i)].seq.size()) == depth) out.push_back(i);
    return out;
}

SetTree buildSetTree(const Coloring& coloring, int power, long long prefix, const Oracle& oracle) {
    if (coloring.uniformity() != 2) throw ArityError("set tree needs a 2-uniform coloring");
    if (power < 1) throw std::invalid_argument("power must be >= 1");
    int r = coloring.colors();
    SetTree tree;
    tree.power = power;
    tree.depth = (power - 1) * r + 1;

    SetTreeNode root;
    root.set = oracle.exactCapable() ? VertexSet::all().withStructure(coloring.blocks())
                                     : VertexSet::all();
    root.provablyFinite = false;
    tree.nodes.push_back(std::move(root));

    // depth-first, children in color order, so node ids are reproducible
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        SetTreeNode& node = tree.nodes[static_cast<std::size_t>(id)];
        if (static_cast<int>(node.seq.size()) == tree.depth) continue;
        std::vector<SetTreeNode> kids;
        if (node.provablyFinite) {
            for (Color i = 0; i < r; ++i) {
                SetTreeNode kid;
                kid.seq = node.seq;
                kid.seq.push_back(i);
                kid.set = i == 0 ? node.set : VertexSet::fromList(node.set.name() + "-empty", {});
                kid.provablyFinite = true;
                kids.push_back(std::move(kid));
            }
        } else {
            Classification cls = classifyWithin(coloring, node.set, prefix, oracle);
            for (Color i = 0; i < r; ++i) {
                SetTreeNode kid;
                kid.seq = node.seq;
                kid.seq.push_back(i);
                kid.set = cls.classOf(i);
                kid.provablyFinite = kid.set.cardinality() == Cardinality::Finite;
                kids.push_back(std::move(kid));
            }
        }
        std::vector<int> ids;
        for (auto& kid : kids) {
            ids.push_back(static_cast<int>(tree.nodes.size()));
            tree.nodes.push_back(std::move(kid));
        }
        tree.nodes[static_cast<std::size_t>(id)].children = ids;
        for (auto it = ids.rbegin(); it != ids.rend(); ++it) stack.push_back(*it);
    }
    return tree;
}

std::pair<Color, std::vector<int>> pigeonholePositions(const std::vector<Color>& seq, int r,
                                                       int power) {
    std::vector<int> counts(static_cast<std::size_t>(r), 0);
    for (Color c : seq) ++counts[static_cast<std::size_t>(c)];
    Color pick = -1;
    for (Color i = 0; i < r; ++i)
        if (counts[static_cast<std::size_t>(i)] >= power) {
            pick = i;
            break;
        }
    if (pick < 0) throw std::logic_error("pigeonhole failure: sequence too short");
    std::vector<int> hs;
    for (int h = static_cast<int>(seq.size()) - 1; h >= 0 && static_cast<int>(hs.size()) < power; --h)
        if (seq[static_cast<std::size_t>(h)] == pick) hs.push_back(h);
    return {pick, hs};
}

PartitionResult powerPartition(const Coloring& coloring, int power, long long prefix,
                               const Oracle& oracle) {
    int r = coloring.colors();
    SetTree tree = buildSetTree(coloring, power, prefix, oracle);

    std::vector<GameSpec> specs;
    std::vector<Vertex> finiteVerts;
    for (int leaf : tree.leafIds()) {
        const SetTreeNode& node = tree.node(leaf);
        if (node.provablyFinite) {
            auto vs = node.set.materialize();
            finiteVerts.insert(finiteVerts.end(), vs.begin(), vs.end());
            continue;
        }
        auto [hostColor, hs] = pigeonholePositions(node.seq, r, power);
        GameSpec spec;
        spec.coloring = coloring;
        spec.hostColor = hostColor;
        spec.power = power;
        spec.ladder.push_back(node.set);
        for (int j = 0; j < power; ++j) {
            int id = 0;  // walk to the ancestor at depth hs[j]
            for (int d = 0; d < hs[static_cast<std::size_t>(j)]; ++d)
                id = tree.node(id).children[static_cast<std::size_t>(
                    node.seq[static_cast<std::size_t>(d)])];
            spec.ladder.push_back(tree.node(id).set);
        }
        std::ostringstream name;
        name << "leaf";
        for (Color c : node.seq) name << c;
        spec.name = name.str();
        specs.push_back(std::move(spec));
    }

    PartitionResult res = parallelCompose(specs, prefix, oracle);
    std::unordered_set<Vertex> onPieces;
    std::vector<Piece> kept;
    for (auto& p : res.pieces) {
        auto vs = pieceVertices(p);
        if (vs.empty()) continue;
        onPieces.insert(vs.begin(), vs.end());
        kept.push_back(std::move(p));
    }
    res.pieces = std::move(kept);
    std::sort(finiteVerts.begin(), finiteVerts.end());
    finiteVerts.erase(std::unique(finiteVerts.begin(), finiteVerts.end()), finiteVerts.end());
    res.leftover.clear();
    for (Vertex v : finiteVerts)
        if (v < prefix && !onPieces.count(v)) res.leftover.push_back(v);
    res.prefix = prefix;
    res.distinctColors = false;

    long long bound = 1;
    for (int d = 0; d < tree.depth; ++d) bound *= r;
    if (static_cast<long long>(res.pieces.size()) > bound)
        throw std::logic_error("piece count exceeds the tree bound");
    return res;
}

MonoPowerPath absorbPathIntoSquare(const Coloring& coloring, const MonoPowerPath& path,
                                   const VertexSet& reservoir,
                                   const std::vector<VertexSet>& protectedFamilies,
                                   const std::vector<Vertex>& avoid, const Oracle& oracle,
                                   std::vector<Vertex>* witnessLog) {
    MonoPowerPath out;
    out.color = path.color;
    out.power = 2;
    out.openEnded = false;
    const auto& vs = path.vertices;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (coloring.colorOfPair(vs[i], vs[i + 1]) != path.color)
            throw std::invalid_argument("absorption input is not a path of its color");
    if (vs.size() <= 1) {
        out.vertices = vs;
        return out;
    }
    std::unordered_set<Vertex> used(avoid.begin(), avoid.end());
    for (Vertex v : vs) used.insert(v);
    std::size_t steps = vs.size() / 2;
    for (std::size_t i = 0; i < steps; ++i) {
        out.vertices.push_back(vs[2 * i]);
        out.vertices.push_back(vs[2 * i + 1]);
        LargenessQuery q;
        q.base = reservoir;
        for (std::size_t t = 2 * i; t < std::min(vs.size(), 2 * i + 4); ++t)
            q.adjacentTo.emplace_back(vs[t], path.color);
        q.exclude.assign(used.begin(), used.end());
        Vertex w = oracle.freshOrThrow(q, "absorption step " + std::to_string(i));
        used.insert(w);
        out.vertices.push_back(w);
        if (!protectedFamilies.empty()) {
            const VertexSet& fam = protectedFamilies[i % protectedFamilies.size()];
            LargenessQuery pq;
            pq.base = fam;
            pq.exclude.assign(used.begin(), used.end());
            Vertex f = oracle.freshOrThrow(pq, "protected witness " + std::to_string(i));
            used.insert(f);  // reserved: never interleaved
            if (witnessLog) witnessLog->push_back(f);
        }
    }
    if (vs.size() % 2 == 1) out.vertices.push_back(vs.back());
    return out;
}

namespace {

struct PokrovskiySearch {
    const Coloring& coloring;
    std::vector<Vertex> verts;  // ascending
    int k;
    std::vector<Vertex> power0;           // growing color-0 power
    std::vector<char> taken;              // by index into verts
    std::vector<std::vector<Vertex>> done;
    std::deque<Vertex> current;
    PokrovskiyResult result;

    Color pairColor(Vertex a, Vertex b) const { return coloring.colorOfPair(a, b); }

    bool remainingFeasible(int pathsUsed, bool haveCurrent, Vertex currentEnd) const {
        long long m = 0, edges = 0, isolated = 0;
        std::vector<Vertex> rest;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (!taken[i]) rest.push_back(verts[i]);
        m = static_cast<long long>(rest.size());
        for (std::size_t a = 0; a < rest.size(); ++a) {
            bool deg = false;
            for (std::size_t b = 0; b < rest.size(); ++b)
                if (a != b && pairColor(rest[a], rest[b]) == 1) {
                    deg = true;
                    if (b > a) ++edges;
                }
            if (!deg && !(haveCurrent && pairColor(rest[a], currentEnd) == 1)) ++isolated;
        }
        int newPathsAllowed = k - pathsUsed;
        if (isolated > newPathsAllowed) return false;
        long long pathsAvailable = newPathsAllowed + (haveCurrent ? 1 : 0);
        return edges >= m - pathsAvailable;
    }

    bool coverRest(int pathsUsed, bool canFlip) {
        if (current.empty()) {
            std::size_t next = verts.size();
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (!taken[i]) {
                    next = i;
                    break;
                }
            if (next == verts.size()) {
                result.found = true;
                result.zeroPower = power0;
                result.onePaths = done;
                return true;
            }
            if (pathsUsed == k) return false;
            if (!remainingFeasible(pathsUsed, false, 0)) return false;
            taken[next] = 1;
            current.push_back(verts[next]);
            if (coverRest(pathsUsed + 1, true)) return true;
            current.pop_back();
            taken[next] = 0;
            return false;
        }
        // close the current path
        done.emplace_back(current.begin(), current.end());
        auto saved = current;
        current.clear();
        if (coverRest(pathsUsed, false)) return true;
        current = saved;
        done.pop_back();
        // extend the right end
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (taken[i] || pairColor(verts[i], current.back()) != 1) continue;
            taken[i] = 1;
            current.push_back(verts[i]);
            if (coverRest(pathsUsed, canFlip)) return true;
            current.pop_back();
            taken[i] = 0;
        }
        // grow the other arm once
        if (canFlip) {
            std::reverse(current.begin(), current.end());
            for (std::size_t i = 0; i < verts.size(); ++i) {
                if (taken[i] || pairColor(verts[i], current.back()) != 1) continue;
                taken[i] = 1;
                current.push_back(verts[i]);
                if (coverRest(pathsUsed, false)) return true;
                current.pop_back();
                taken[i] = 0;
            }
            std::reverse(current.begin(), current.end());
        }
        return false;
    }

    // grow the color-0 power as deep as possible before trying to cover the
    // rest: on an all-0 clique this returns the full power immediately
    bool extendPower() {
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (taken[i]) continue;
            Vertex v = verts[i];
            bool ok = true;
            for (std::size_t back = 1; back <= static_cast<std::size_t>(k) && back <= power0.size();
                 ++back)
                if (pairColor(v, power0[power0.size() - back]) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            taken[i] = 1;
            power0.push_back(v);
            if (extendPower()) return true;
            power0.pop_back();
            taken[i] = 0;
        }
        return coverRest(0, false);
    }
};

}  // namespace

PokrovskiyResult pokrovskiyFinite(const Coloring& coloring, const std::vector<Vertex>& verts,
                                  int k) {
    if (coloring.uniformity() != 2 || coloring.colors() != 2)
        throw std::invalid_argument("the finite cover search needs a 2-colored graph");
    PokrovskiySearch s{coloring, verts, k, {}, {}, {}, {}, {}};
    std::sort(s.verts.begin(), s.verts.end());
    s.taken.assign(s.verts.size(), 0);
    s.extendPower();
    return s.result;
}

namespace {

// spanning-path DP over subsets: bit j of dp[mask] set iff some path of the
// given color spans mask and ends at verts[j]
std::vector<std::uint32_t> spanningPathDp(const Coloring& coloring,
                                          const std::vector<Vertex>& verts, Color color) {
    std::size_t n = verts.size();
    std::vector<std::uint32_t> dp(static_cast<std::size_t>(1) << n, 0);
    for (std::size_t i = 0; i < n; ++i) dp[static_cast<std::size_t>(1) << i] = 1u << i;
    for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(ends & (1u << j))) continue;
            for (std::size_t u = 0; u < n; ++u) {
                if (mask & (1u << u)) continue;
                if (coloring.colorOfPair(verts[j], verts[u]) == color)
                    dp[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    return dp;
}

std::vector<Vertex> reconstructPath(const Coloring& coloring, const std::vector<Vertex>& verts,
                                    Color color, const std::vector<std::uint32_t>& dp,
                                    std::uint32_t mask) {
    std::vector<Vertex> out;
    if (!mask) return out;
    std::size_t n = verts.size();
    std::size_t last = 0;
    while (!(dp[mask] & (1u << last))) ++last;
    while (mask) {
        out.push_back(verts[last]);
        std::uint32_t prevMask = mask & ~(1u << last);
        if (!prevMask) break;
        std::size_t prev = n;
        for (std::size_t u = 0; u < n; ++u) {
            if (!(dp[prevMask] & (1u << u))) continue;
            if (coloring.colorOfPair(verts[u], verts[last]) == color) {
                prev = u;
                break;
            }
        }
        mask = prevMask;
        last = prev;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

std::pair<std::vector<Vertex>, std::vector<Vertex>> maximalTwoPathPartition(
    const Coloring& coloring, const std::vector<Vertex>& vertsIn) {
    std::vector<Vertex> verts = vertsIn;
    std::sort(verts.begin(), verts.end());
    std::size_t n = verts.size();
    if (n > 20) throw std::invalid_argument("two-path search limited to 20 vertices");
    if (n == 0) return {{}, {}};
    auto dp0 = spanningPathDp(coloring, verts, 0);
    auto dp1 = spanningPathDp(coloring, verts, 1);
    std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
    for (std::uint32_t s = full + 1; s-- > 0;) {
        std::uint32_t comp = full & ~s;
        bool ok0 = s == 0 || dp0[s] != 0;
        bool ok1 = comp == 0 || dp1[comp] != 0;
        if (ok0 && ok1)
            return {reconstructPath(coloring, verts, 0, dp0, s),
                    reconstructPath(coloring, verts, 1, dp1, comp)};
    }
    // the covering theorem says this is unreachable; report the best total
    long long best = 0;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (s != 0 && dp0[s] == 0) continue;
        for (std::uint32_t t = full & ~s;; t = (t - 1) & (full & ~s)) {
            if (t == 0 || dp1[t] != 0)
                best = std::max(best, static_cast<long long>(std::popcount(s) + std::popcount(t)));
            if (t == 0) break;
        }
    }
    throw TwoPathAlarm("two disjoint paths cover only " + std::to_string(best) + " of " +
                           std::to_string(n) + " vertices (falsification alarm)",
                       best);
}

PartitionResult fourSquarePartition(const Coloring& coloring, long long prefix,
                                    const Oracle& oracle) {
    if (coloring.colors() != 2 || coloring.uniformity() != 2)
        throw std::invalid_argument("four-square partition needs a 2-colored graph");

    Classification cls0 = classifyWithin(coloring, VertexSet::all(), prefix, oracle);
    bool swapped = cls0.specialColor() == 1;
    Coloring view = swapped ? permuteColors(coloring, {1, 0}) : coloring;
    Oracle voracle(view, oracle.mode(), oracle.horizon());
    if (swapped) cls0 = classifyWithin(view, VertexSet::all(), prefix, voracle);

    VertexSet a0 = cls0.classOf(0);
    VertexSet b0 = cls0.classOf(1);
    std::vector<Piece> pieces;

    if (b0.cardinality() == Cardinality::Finite) {
        // finite remainder: cover it exactly, absorb its color-1 paths into
        // squares through a0, then one game mops up the rest of a0
        auto blist = b0.materialize();
        auto pok = pokrovskiyFinite(view, blist, 2);
        if (!pok.found)
            throw std::logic_error("finite cover search found no solution (falsification alarm)");
        std::vector<Vertex> used = blist;
        MonoPowerPath p0{pok.onePaths.size() > 0 ? pok.onePaths[0] : std::vector<Vertex>{}, 1, 1,
                         false};
        MonoPowerPath p1{pok.onePaths.size() > 1 ? pok.onePaths[1] : std::vector<Vertex>{}, 1, 1,
                         false};
        MonoPowerPath r0 = absorbPathIntoSquare(view, p0, a0, {}, used, voracle);
        used.insert(used.end(), r0.vertices.begin(), r0.vertices.end());
        MonoPowerPath r1 = absorbPathIntoSquare(view, p1, a0, {}, used, voracle);
        used.insert(used.end(), r1.vertices.begin(), r1.vertices.end());
        MonoPowerPath q{pok.zeroPower, 0, 2, false};
        VertexSet residue = a0.minus(used);
        GameSpec g{view, 0, 2, {residue, residue, residue}, "residue"};
        PartitionResult sub = parallelCompose({g}, prefix, voracle, used);
        pieces = {std::move(r0), std::move(r1), std::move(q), std::move(sub.pieces[0])};
    } else {
        Classification cls1 = classifyWithin(view, b0, prefix, voracle);
        Color ic1 = cls1.specialColor();
        VertexSet a1 = cls1.classOf(ic1);
        VertexSet b1 = cls1.classOf(1 - ic1);
        if (ic1 == 0) {
            GameSpec gA{view, 0, 2, {a0, a0, a0}, "a0"};
            GameSpec gB{view, 0, 2, {a1, a1, a1}, "a1"};
            GameSpec gC{view, 1, 2, {b1, a1, a0}, "b1"};
            PartitionResult sub = parallelCompose({gA, gB, gC}, prefix, voracle);
            pieces = std::move(sub.pieces);
        } else {
            MonoPowerPath p0, p1;
            if (b1.cardinality() == Cardinality::Finite) {
                auto [q0, q1] = maximalTwoPathPartition(view, b1.materialize());
                p0 = {q0, 0, 1, false};
                p1 = {q1, 1, 1, false};
            } else {
                PartitionResult sub = radoPartitionWithin(view, b1, prefix, voracle);
                p0 = std::get<MonoPowerPath>(sub.pieces[0]);
                p1 = std::get<MonoPowerPath>(sub.pieces[1]);
            }
            std::vector<Vertex> used = p0.vertices;
            used.insert(used.end(), p1.vertices.begin(), p1.vertices.end());
            MonoPowerPath r0 = absorbPathIntoSquare(view, p0, a1, {a1}, used, voracle);
            used.insert(used.end(), r0.vertices.begin(), r0.vertices.end());
            MonoPowerPath r1 = absorbPathIntoSquare(view, p1, a0, {a0}, used, voracle);
            used.insert(used.end(), r1.vertices.begin(), r1.vertices.end());
            VertexSet a0p = a0.minus(used);
            VertexSet a1p = a1.minus(used);
            GameSpec gA{view, 0, 2, {a0p, a0p, a0p}, "a0'"};
            GameSpec gB{view, 1, 2, {a1p, a1p, a1p}, "a1'"};
            PartitionResult sub = parallelCompose({gA, gB}, prefix, voracle, used);
            pieces = {std::move(r0), std::move(r1), std::move(sub.pieces[0]),
                      std::move(sub.pieces[1])};
        }
    }

    PartitionResult res;
    res.prefix = prefix;
    res.distinctColors = false;
    for (auto& p : pieces) {
        auto& mp = std::get<MonoPowerPath>(p);
        if (mp.vertices.empty()) continue;
        if (swapped) mp.color = 1 - mp.color;
        res.pieces.emplace_back(std::move(mp));
    }
    if (res.pieces.size() > 4) throw std::logic_error("more than four squares produced");
    return res;
}

namespace {

// all orderings of `pool ∩ mask` forming a square of the color: DP over
// (mask, last, previous)
bool squareSpannable(const Coloring& c, const std::vector<Vertex>& pool, std::uint32_t mask,
                     Color color) {
    std::size_t n = pool.size();
    if (mask == 0) return true;
    if (std::popcount(mask) == 1) return true;
    std::size_t none = n;
    // dp[last][prev] per mask, rolled over masks ascending
    std::vector<std::vector<std::vector<char>>> dp(
        static_cast<std::size_t>(1) << n,
        std::vector<std::vector<char>>(n, std::vector<char>(n + 1, 0)));
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) dp[1u << i][i][none] = 1;
    for (std::uint32_t m = 1; m < dp.size(); ++m) {
        if ((m & mask) != m) continue;
        for (std::size_t last = 0; last < n; ++last) {
            if (!(m & (1u << last))) continue;
            for (std::size_t prev = 0; prev <= n; ++prev) {
                if (!dp[m][last][prev]) continue;
                if (m == mask) return true;
                for (std::size_t next = 0; next < n; ++next) {
                    if (!(mask & (1u << next)) || (m & (1u << next))) continue;
                    if (c.colorOfPair(pool[next], pool[last]) != color) continue;
                    if (prev != none && c.colorOfPair(pool[next], pool[prev]) != color) continue;
                    dp[m | (1u << next)][next][last] = 1;
                }
            }
        }
    }
    return false;
}

}  // namespace

CounterexampleReport counterexampleCheck() {
    Coloring c = makeCounterexample();
    CounterexampleReport rep;
    std::vector<Vertex> specials(9);
    std::iota(specials.begin(), specials.end(), 0);
    rep.specialCount = 9;
    rep.groupSizes = {4, 4, 1};

    // (i) no split of the nine specials into two monochromatic squares
    rep.twoSquareCover = false;
    for (std::uint32_t s = 0; s < (1u << 9); ++s) {
        std::uint32_t comp = ((1u << 9) - 1) & ~s;
        bool left = squareSpannable(c, specials, s, 0) || squareSpannable(c, specials, s, 1);
        if (!left) continue;
        bool right = squareSpannable(c, specials, comp, 0) || squareSpannable(c, specials, comp, 1);
        if (right) {
            rep.twoSquareCover = true;
            break;
        }
    }

    // (ii) every color-0 square inside the specials, by depth-first extension
    rep.boundsAvoidingD = true;
    rep.boundsThroughD = true;
    rep.maxSpecialsOneZeroSquare = 0;
    std::vector<Vertex> seq;
    std::vector<char> inSeq(9, 0);
    auto audit = [&]() {
        ++rep.zeroSquaresEnumerated;
        long long inB = 0, inC = 0;
        bool hasD = false;
        for (Vertex v : seq) {
            if (v <= 3) ++inB;
            else if (v <= 7) ++inC;
            else hasD = true;
        }
        if (hasD) {
            if (inB > 2 || inC > 2) rep.boundsThroughD = false;
            rep.maxSpecialsOneZeroSquare =
                std::max(rep.maxSpecialsOneZeroSquare, static_cast<long long>(seq.size()));
        } else {
            if (inB > 1 || inC > 1) rep.boundsAvoidingD = false;
        }
    };
    std::function<void()> extend = [&]() {
        audit();
        for (Vertex v = 0; v < 9; ++v) {
            if (inSeq[static_cast<std::size_t>(v)]) continue;
            if (c.colorOfPair(v, seq.back()) != 0) continue;
            if (seq.size() >= 2 && c.colorOfPair(v, seq[seq.size() - 2]) != 0) continue;
            seq.push_back(v);
            inSeq[static_cast<std::size_t>(v)] = 1;
            extend();
            inSeq[static_cast<std::size_t>(v)] = 0;
            seq.pop_back();
        }
    };
    for (Vertex start = 0; start < 9; ++start) {
        seq = {start};
        inSeq.assign(9, 0);
        inSeq[static_cast<std::size_t>(start)] = 1;
        extend();
    }

    // (iii) monochromatic squares on [0,30) touching both sides are color 1
    rep.mixedSquaresAreColorOne = true;
    const Vertex range = 30;
    const std::size_t maxLen = 5;
    std::vector<Vertex> seq2;
    std::vector<char> used2(static_cast<std::size_t>(range), 0);
    for (Color color = 0; color < 2; ++color) {
        std::function<void()> grow = [&]() {
            if (seq2.size() >= 2) {
                bool meetsA = false, meetsSpecial = false;
                for (Vertex v : seq2) (v >= 9 ? meetsA : meetsSpecial) = true;
                if (meetsA && meetsSpecial) {
                    ++rep.mixedSquaresChecked;
                    if (color == 0) rep.mixedSquaresAreColorOne = false;
                }
            }
            if (seq2.size() == maxLen) return;
            for (Vertex v = 0; v < range; ++v) {
                if (used2[static_cast<std::size_t>(v)]) continue;
                if (c.colorOfPair(v, seq2.back()) != color) continue;
                if (seq2.size() >= 2 && c.colorOfPair(v, seq2[seq2.size() - 2]) != color) continue;
                seq2.push_back(v);
                used2[static_cast<std::size_t>(v)] = 1;
                grow();
                used2[static_cast<std::size_t>(v)] = 0;
                seq2.pop_back();
            }
        };
        for (Vertex start = 0; start < range; ++start) {
            seq2 = {start};
            used2.assign(static_cast<std::size_t>(range), 0);
            used2[static_cast<std::size_t>(start)] = 1;
            grow();
        }
    }
    return rep;
}

SweepOutcome sweepPokrovskiyExhaustive(int n, int k, int shards, int shard) {
    SweepOutcome out;
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (pairs > 20) throw std::invalid_argument("exhaustive sweep limited to 20 edges");
    std::vector<Vertex> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
        if (shards > 1 && static_cast<int>(mask % static_cast<std::uint64_t>(shards)) != shard)
            continue;
        std::vector<Color> colors(static_cast<std::size_t>(pairs));
        for (long long b = 0; b < pairs; ++b)
            colors[static_cast<std::size_t>(b)] = (mask >> b) & 1 ? 1 : 0;
        Coloring c = makeFinitePairColoring(n, 2, std::move(colors));
        ++out.instances;
        if (!pokrovskiyFinite(c, verts, k).found) ++out.alarms;
    }
    return out;
}

SweepOutcome sweepPokrovskiySeeded(int n, int k, int count, std::uint64_t seed) {
    SweepOutcome out;
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<Vertex> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    for (int inst = 0; inst < count; ++inst) {
        std::vector<Color> colors(static_cast<std::size_t>(pairs));
        for (long long b = 0; b < pairs; ++b)
            colors[static_cast<std::size_t>(b)] = static_cast<Color>(
                mix64(seed ^ mix64(static_cast<std::uint64_t>(inst) * 131 + static_cast<std::uint64_t>(b))) & 1);
        Coloring c = makeFinitePairColoring(n, 2, std::move(colors));
        ++out.instances;
        if (!pokrovskiyFinite(c, verts, k).found) ++out.alarms;
    }
    return out;
}

}  // namespace monopath
