#include "monopath/paths.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>

namespace monopath {

namespace {

std::string pairText(Vertex a, Vertex b) {
    std::ostringstream os;
    os << '{' << a << ',' << b << '}';
    return os.str();
}

bool checkDistinct(const std::vector<Vertex>& vs, VerificationReport& rep) {
    std::unordered_set<Vertex> seen;
    for (Vertex v : vs) {
        if (v < 0) rep.add("negative-vertex", std::to_string(v));
        if (!seen.insert(v).second) rep.add("repeated-vertex", std::to_string(v));
    }
    return rep.ok;
}

}  // namespace

std::string VerificationReport::summary() const {
    if (ok) return "valid";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (std::size_t i = 0; i < violations.size() && i < 8; ++i)
        os << ' ' << violations[i].kind << '(' << violations[i].detail << ')';
    if (violations.size() > 8) os << " ...";
    return os.str();
}

VerificationReport verifyPowerPath(const Coloring& c, const MonoPowerPath& piece) {
    VerificationReport rep;
    if (c.uniformity() != 2) {
        rep.add("wrong-uniformity", "power paths live in 2-uniform colorings");
        return rep;
    }
    if (piece.power < 1) rep.add("bad-power", std::to_string(piece.power));
    if (piece.color < 0 || piece.color >= c.colors()) rep.add("bad-color", std::to_string(piece.color));
    checkDistinct(piece.vertices, rep);
    const auto& vs = piece.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::size_t top = std::min(vs.size(), i + static_cast<std::size_t>(piece.power) + 1);
        for (std::size_t j = i + 1; j < top; ++j) {
            try {
                Color got = c.colorOfPair(vs[i], vs[j]);
                if (got != piece.color)
                    rep.add("wrong-color", pairText(vs[i], vs[j]) + " has color " + std::to_string(got));
            } catch (const std::exception& e) {
                rep.add("edge-error", pairText(vs[i], vs[j]) + ": " + e.what());
            }
        }
    }
    return rep;
}

VerificationReport verifyTight(const Coloring& c, const TightPiece& piece) {
    VerificationReport rep;
    int k = piece.uniformity;
    if (k != c.uniformity()) {
        rep.add("wrong-uniformity",
                std::to_string(k) + " piece vs " + std::to_string(c.uniformity()) + " coloring");
        return rep;
    }
    if (piece.color < 0 || piece.color >= c.colors()) rep.add("bad-color", std::to_string(piece.color));
    checkDistinct(piece.vertices, rep);
    const auto& vs = piece.vertices;
    long long n = static_cast<long long>(vs.size());
    auto checkWindow = [&](long long start, bool wrap) {
        std::vector<Vertex> w(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t)
            w[static_cast<std::size_t>(t)] = vs[static_cast<std::size_t>((start + t) % n)];
        std::ostringstream os;
        os << (wrap ? "wrap-window@" : "window@") << start;
        try {
            Color got = c.colorOf(std::span<const Vertex>(w));
            if (got != piece.color) rep.add("wrong-color", os.str() + " has color " + std::to_string(got));
        } catch (const std::exception& e) {
            rep.add("edge-error", os.str() + ": " + e.what());
        }
    };
    if (piece.shape == TightPiece::Shape::Cycle) {
        if (n == 0) return rep;
        if (n < k) {
            rep.add("cycle-too-short", std::to_string(n) + " < " + std::to_string(k));
            return rep;
        }
        for (long long s = 0; s < n; ++s) checkWindow(s, s + k > n);
    } else {
        for (long long s = 0; s + k <= n; ++s) checkWindow(s, false);
    }
    return rep;
}

VerificationReport verifyPartition(const Coloring& c, const PartitionResult& result) {
    VerificationReport rep;
    std::unordered_map<Vertex, std::size_t> owner;
    for (std::size_t idx = 0; idx < result.pieces.size(); ++idx) {
        auto sub = std::visit(
            [&](const auto& p) {
                if constexpr (std::is_same_v<std::decay_t<decltype(p)>, MonoPowerPath>)
                    return verifyPowerPath(c, p);
                else
                    return verifyTight(c, p);
            },
            result.pieces[idx]);
        for (auto& v : sub.violations)
            rep.add(v.kind, "piece " + std::to_string(idx) + ": " + v.detail);
        for (Vertex v : pieceVertices(result.pieces[idx])) {
            auto [it, fresh] = owner.emplace(v, idx);
            if (!fresh)
                rep.add("disjointness", "vertex " + std::to_string(v) + " in pieces " +
                                            std::to_string(it->second) + " and " + std::to_string(idx));
        }
    }
    std::unordered_set<Vertex> leftover(result.leftover.begin(), result.leftover.end());
    for (Vertex v : result.leftover)
        if (owner.count(v))
            rep.add("leftover-overlap", "vertex " + std::to_string(v) + " is in a piece and in leftover");
    for (Vertex v = 0; v < result.prefix; ++v)
        if (!owner.count(v) && !leftover.count(v))
            rep.add("coverage-gap", std::to_string(v));
    if (result.distinctColors) {
        std::unordered_set<Color> seen;
        for (const auto& p : result.pieces)
            if (!seen.insert(pieceColor(p)).second)
                rep.add("duplicate-color", std::to_string(pieceColor(p)));
    }
    rep.leftoverSize = static_cast<long long>(leftover.size());
    return rep;
}

MonoPowerPath endExtend(const MonoPowerPath& base, std::span<const Vertex> extension,
                        const Coloring& c) {
    MonoPowerPath out = base;
    std::unordered_set<Vertex> seen(base.vertices.begin(), base.vertices.end());
    for (Vertex v : extension) {
        if (!seen.insert(v).second)
            throw ExtensionError("extension reuses vertex " + std::to_string(v), v, v);
        out.vertices.push_back(v);
    }
    std::size_t oldLen = base.vertices.size();
    const auto& vs = out.vertices;
    for (std::size_t j = oldLen; j < vs.size(); ++j) {
        std::size_t lo = j > static_cast<std::size_t>(out.power) ? j - static_cast<std::size_t>(out.power) : 0;
        for (std::size_t i = lo; i < j; ++i) {
            Color got = c.colorOfPair(vs[i], vs[j]);
            if (got != out.color)
                throw ExtensionError("edge " + pairText(vs[i], vs[j]) + " is color " +
                                         std::to_string(got) + ", expected " + std::to_string(out.color),
                                     vs[i], vs[j]);
        }
    }
    return out;
}

std::vector<Vertex> pieceVertices(const Piece& p) {
    return std::visit([](const auto& x) { return x.vertices; }, p);
}

Color pieceColor(const Piece& p) {
    return std::visit([](const auto& x) { return x.color; }, p);
}

}  // namespace monopath
