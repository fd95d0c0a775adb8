#include "monopath/game.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace monopath {

GridIndex triangleOrder(long long ell, int k) {
    if (ell < 1) throw std::invalid_argument("triangleOrder is 1-based");
    // diagonal d holds min(k,d)+1 cells
    long long d = 0;
    long long before = 0;
    while (true) {
        long long width = std::min<long long>(k, d) + 1;
        if (before + width >= ell) break;
        before += width;
        ++d;
    }
    int j = static_cast<int>(ell - before - 1);
    return {d - j, j};
}

long long triangleOrderInverse(const GridIndex& g, int k) {
    long long d = g.row + g.level;
    long long before = 0;
    for (long long t = 0; t < d; ++t) before += std::min<long long>(k, t) + 1;
    return before + g.level + 1;
}

AdamStrategy adamEmpty() {
    return [](long long, const std::unordered_set<Vertex>&) { return std::vector<Vertex>{}; };
}

AdamStrategy adamRandomSets(std::uint64_t seed, int maxSize, Vertex bound) {
    if (bound < 1 || maxSize < 1) throw std::invalid_argument("bad random-strategy parameters");
    return [=](long long round, const std::unordered_set<Vertex>& played) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(round));
        std::uniform_int_distribution<int> sizeDist(1, maxSize);
        std::uniform_int_distribution<Vertex> vDist(0, bound - 1);
        int want = sizeDist(rng);
        std::vector<Vertex> out;
        for (int tries = 0; tries < 20 * want && static_cast<int>(out.size()) < want; ++tries) {
            Vertex v = vDist(rng);
            if (!played.count(v) && std::find(out.begin(), out.end(), v) == out.end())
                out.push_back(v);
        }
        return out;
    };
}

AdamStrategy adamMinimumStealer(VertexSet target, long long horizon) {
    return [target = std::move(target), horizon](long long,
                                                 const std::unordered_set<Vertex>& played) {
        for (Vertex v = 0; v <= horizon; ++v)
            if (target.contains(v) && !played.count(v)) return std::vector<Vertex>{v};
        return std::vector<Vertex>{};
    };
}

AdamStrategy adamReplayAttacker() {
    return [](long long, const std::unordered_set<Vertex>&) { return std::vector<Vertex>{0}; };
}

namespace {

struct CellKey {
    long long row;
    int level;
    bool operator<(const CellKey& o) const {
        return row != o.row ? row < o.row : level < o.level;
    }
};

// Bob's side of one game. The finite-W variant plays whole rows per round;
// the infinite variant plays one grid cell per round following the diagonal
// order, absorbing the minimum of W on every level-0 cell.
struct BobPlayer {
    GameSpec spec;
    bool finiteMode = false;
    std::vector<Vertex> finiteTarget;  // W materialized (finite mode)
    long long finiteN = -1;            // row count, fixed in round 0
    long long roundIndex = 0;
    long long cursor = 1;
    std::map<CellKey, Vertex> cells;
    std::vector<CellPick> picks;
    std::vector<Vertex> levelZeroPicks;

    explicit BobPlayer(GameSpec s) : spec(std::move(s)) {
        if (static_cast<int>(spec.ladder.size()) != spec.power + 1)
            throw std::invalid_argument("ladder must list W_0..W_k");
        if (spec.power < 1) throw std::invalid_argument("power must be >= 1");
        finiteMode = spec.ladder[0].cardinality() == Cardinality::Finite;
        if (finiteMode) finiteTarget = spec.ladder[0].materialize();
    }

    Vertex pickCell(const GridIndex& g, const std::unordered_set<Vertex>& played,
                    const Oracle& oracle) {
        LargenessQuery q;
        q.exclude.assign(played.begin(), played.end());
        Vertex v;
        if (g.level == 0) {
            q.base = spec.ladder[0];
            v = oracle.freshOrThrow(q, spec.name + ": minimum of W");
            levelZeroPicks.push_back(v);
        } else {
            // lower-level picks within lex distance k live in rows n and n+1;
            // those are the pairs the path ordering will interrogate
            q.base = spec.ladder[static_cast<std::size_t>(g.level)];
            for (const auto& [key, vert] : cells)
                if (key.level < g.level && (key.row == g.row || key.row == g.row + 1))
                    q.adjacentTo.emplace_back(vert, spec.hostColor);
            std::ostringstream ctx;
            ctx << spec.name << ": cell (" << g.row << ',' << g.level << ')';
            v = oracle.freshOrThrow(q, ctx.str());
        }
        cells[{g.row, g.level}] = v;
        picks.push_back({g, v});
        return v;
    }

    std::vector<Vertex> move(const std::unordered_set<Vertex>& played, const Oracle& oracle) {
        long long round = roundIndex++;
        if (finiteMode) {
            std::vector<Vertex> out;
            if (round == 0) {
                for (Vertex v : finiteTarget)
                    if (!played.count(v)) out.push_back(v);
                finiteN = static_cast<long long>(out.size());
                for (long long n = 0; n < finiteN; ++n) {
                    cells[{n, 0}] = out[static_cast<std::size_t>(n)];
                    picks.push_back({{n, 0}, out[static_cast<std::size_t>(n)]});
                    levelZeroPicks.push_back(out[static_cast<std::size_t>(n)]);
                }
            } else if (round <= spec.power && finiteN > 0) {
                int j = static_cast<int>(round);
                std::unordered_set<Vertex> taken = played;
                for (long long n = 0; n < finiteN; ++n) {
                    LargenessQuery q;
                    q.base = spec.ladder[static_cast<std::size_t>(j)];
                    for (const auto& [key, vert] : cells)
                        if (key.level < j) q.adjacentTo.emplace_back(vert, spec.hostColor);
                    q.exclude.assign(taken.begin(), taken.end());
                    std::ostringstream ctx;
                    ctx << spec.name << ": row set level " << j;
                    Vertex v = oracle.freshOrThrow(q, ctx.str());
                    cells[{n, j}] = v;
                    picks.push_back({{n, j}, v});
                    taken.insert(v);
                    out.push_back(v);
                }
            }
            return out;
        }
        // infinite mode: a single cell per round
        GridIndex g = triangleOrder(cursor, spec.power);
        ++cursor;
        return {pickCell(g, played, oracle)};
    }

    long long maxPickedRow() const {
        long long m = -1;
        for (const auto& [key, v] : cells) m = std::max(m, key.row);
        return m;
    }

    // complete every opened row so the picked cells form a full rectangle
    std::vector<Vertex> finish(std::unordered_set<Vertex>& played, const Oracle& oracle) {
        std::vector<Vertex> added;
        long long top = maxPickedRow();
        if (top < 0) return added;
        if (finiteMode) return added;  // rows are complete after round k
        long long lastCell = triangleOrderInverse({top, spec.power}, spec.power);
        for (long long ell = cursor; ell <= lastCell; ++ell) {
            GridIndex g = triangleOrder(ell, spec.power);
            if (g.row > top) continue;
            Vertex v = pickCell(g, played, oracle);
            played.insert(v);
            added.push_back(v);
        }
        cursor = lastCell + 1;
        return added;
    }

    bool rectangleComplete() const {
        long long top = maxPickedRow();
        if (top < 0) return true;
        for (long long n = 0; n <= top; ++n)
            for (int j = 0; j <= spec.power; ++j)
                if (!cells.count({n, j})) return false;
        return true;
    }

    // a finite-W game must run rounds 0..k before its rows are complete
    bool needsRounds() const {
        return finiteMode && finiteN > 0 && roundIndex <= spec.power;
    }

    MonoPowerPath claimedPath() const {
        // rows 0..F where F is the last row whose cells are all picked and
        // every earlier row is complete too
        long long top = maxPickedRow();
        long long full = -1;
        for (long long n = 0; n <= top; ++n) {
            bool complete = true;
            for (int j = 0; j <= spec.power; ++j)
                if (!cells.count({n, j})) {
                    complete = false;
                    break;
                }
            if (!complete) break;
            full = n;
        }
        MonoPowerPath p;
        p.color = spec.hostColor;
        p.power = spec.power;
        p.openEnded = spec.ladder[0].cardinality() != Cardinality::Finite;
        for (long long n = 0; n <= full; ++n)
            for (int j = 0; j <= spec.power; ++j)
                p.vertices.push_back(cells.at({n, j}));
        return p;
    }

    std::optional<Vertex> certifiedPrefix() const {
        if (finiteMode) return std::nullopt;
        if (levelZeroPicks.empty()) return 0;
        return levelZeroPicks.back() + 1;
    }
};

GameTranscript assembleTranscript(const BobPlayer& bob, std::vector<GameMove> rounds) {
    GameTranscript t;
    t.rounds = std::move(rounds);
    t.picks = bob.picks;
    t.maxRow = bob.maxPickedRow();
    t.finished = bob.rectangleComplete();
    t.claimedPath = bob.claimedPath();
    t.certifiedPrefix = bob.certifiedPrefix();
    return t;
}

}  // namespace

GameTranscript playGame(const GameSpec& spec, const AdamStrategy& adam, long long rounds,
                        const Oracle& oracle, bool finish) {
    BobPlayer bob(spec);
    std::unordered_set<Vertex> played;
    std::vector<GameMove> log;
    for (long long round = 0; round < rounds; ++round) {
        GameMove mv;
        mv.adam = adam(round, played);
        for (Vertex v : mv.adam) {
            if (v < 0 || played.count(v))
                throw IllegalMoveError("opponent replayed vertex " + std::to_string(v) +
                                       " in round " + std::to_string(round));
            played.insert(v);
        }
        mv.bob = bob.move(played, oracle);
        for (Vertex v : mv.bob) played.insert(v);
        log.push_back(std::move(mv));
    }
    if (finish) {
        GameMove mv;
        mv.bob = bob.finish(played, oracle);
        if (!mv.bob.empty()) log.push_back(std::move(mv));
    }
    return assembleTranscript(bob, std::move(log));
}

WinAudit auditTranscript(const GameSpec& spec, const GameTranscript& t, long long prefix) {
    WinAudit audit;
    std::unordered_set<Vertex> covered;
    for (const auto& mv : t.rounds) {
        for (Vertex v : mv.adam) covered.insert(v);
        for (Vertex v : mv.bob) covered.insert(v);
    }
    audit.coverOk = true;
    const VertexSet& w = spec.ladder[0];
    for (Vertex v = 0; v < prefix; ++v) {
        if (!w.contains(v) || covered.count(v)) continue;
        audit.coverOk = false;
        audit.problems.push_back("uncovered target vertex " + std::to_string(v));
    }
    audit.pathReport = verifyPowerPath(spec.coloring, t.claimedPath);
    audit.pathOk = audit.pathReport.ok;
    // every pair of picks within lex distance <= k must carry a host edge
    audit.pairsOk = true;
    long long k = spec.power;
    for (std::size_t a = 0; a < t.picks.size(); ++a) {
        for (std::size_t b = a + 1; b < t.picks.size(); ++b) {
            long long pa = (k + 1) * t.picks[a].cell.row + t.picks[a].cell.level;
            long long pb = (k + 1) * t.picks[b].cell.row + t.picks[b].cell.level;
            if (std::llabs(pa - pb) > k) continue;
            if (spec.coloring.colorOfPair(t.picks[a].vertex, t.picks[b].vertex) != spec.hostColor) {
                audit.pairsOk = false;
                std::ostringstream os;
                os << "picked pair {" << t.picks[a].vertex << ',' << t.picks[b].vertex
                   << "} misses the host color";
                audit.problems.push_back(os.str());
            }
        }
    }
    return audit;
}

PartitionResult parallelCompose(const std::vector<GameSpec>& specs, long long prefix,
                                const Oracle& oracle, const std::vector<Vertex>& preOccupied) {
    std::size_t m = specs.size();
    std::vector<BobPlayer> bobs;
    bobs.reserve(m);
    for (const auto& s : specs) bobs.emplace_back(s);

    std::unordered_set<Vertex> played(preOccupied.begin(), preOccupied.end());
    std::vector<Vertex> allPicksOrdered;          // every Bob pick, play order
    std::vector<std::size_t> fedUpTo(m, 0);       // per game: prefix of allPicksOrdered already fed
    std::vector<std::unordered_set<Vertex>> own(m);
    std::vector<std::vector<GameMove>> logs(m);
    std::vector<Vertex> nextUncovered(m, 0);

    auto satisfied = [&](std::size_t i) {
        if (bobs[i].needsRounds()) return false;
        Vertex& v = nextUncovered[i];
        while (v < prefix && (!specs[i].ladder[0].contains(v) || played.count(v))) ++v;
        return v >= prefix;
    };

    int maxPower = 1;
    for (const auto& s : specs) maxPower = std::max(maxPower, s.power);
    long long cap = (maxPower + 1) * (prefix + 32) + 64;

    for (long long round = 0;; ++round) {
        bool allDone = true;
        for (std::size_t i = 0; i < m; ++i)
            if (!satisfied(i)) {
                allDone = false;
                break;
            }
        if (allDone) break;
        if (round >= cap) {
            std::size_t blocked = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (!satisfied(i)) blocked = i;
            throw ExhaustedError(specs[blocked].name + ": round budget exceeded before covering " +
                                     std::to_string(nextUncovered[blocked]),
                                 "rounds=" + std::to_string(cap), false);
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (satisfied(i)) continue;
            GameMove mv;
            for (std::size_t p = fedUpTo[i]; p < allPicksOrdered.size(); ++p) {
                Vertex v = allPicksOrdered[p];
                if (!own[i].count(v)) mv.adam.push_back(v);
            }
            fedUpTo[i] = allPicksOrdered.size();
            mv.bob = bobs[i].move(played, oracle);
            for (Vertex v : mv.bob) {
                played.insert(v);
                own[i].insert(v);
                allPicksOrdered.push_back(v);
            }
            logs[i].push_back(std::move(mv));
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        GameMove mv;
        mv.bob = bobs[i].finish(played, oracle);
        if (!mv.bob.empty()) logs[i].push_back(std::move(mv));
    }

    PartitionResult res;
    res.prefix = prefix;
    for (std::size_t i = 0; i < m; ++i) {
        GameTranscript t = assembleTranscript(bobs[i], std::move(logs[i]));
        if (!t.finished)
            throw std::logic_error(specs[i].name + ": grid not completed to a rectangle");
        res.pieces.emplace_back(std::move(t.claimedPath));
    }
    // every target vertex below the prefix is either pre-occupied or on a piece
    std::unordered_set<Vertex> pieceVerts;
    for (const auto& p : res.pieces)
        for (Vertex v : pieceVertices(p)) pieceVerts.insert(v);
    std::unordered_set<Vertex> occupied(preOccupied.begin(), preOccupied.end());
    for (Vertex v = 0; v < prefix; ++v) {
        bool inSomeW = false;
        for (const auto& s : specs)
            if (s.ladder[0].contains(v)) {
                inSomeW = true;
                break;
            }
        if (inSomeW && !occupied.count(v) && !pieceVerts.count(v))
            throw std::logic_error("composition left target vertex uncovered: " + std::to_string(v));
    }
    return res;
}

}  // namespace monopath
