#include <doctest.h>

#include <algorithm>
#include <set>

#include "monopath/rado.hpp"

using namespace monopath;

namespace {

std::vector<Vertex> verticesOf(const Piece& p) { return pieceVertices(p); }

}  // namespace

TEST_SUITE("rado") {
    TEST_CASE("single class on a constant coloring covers the prefix") {
        Coloring c = makeConstant(0, 1);
        Oracle o(c, OracleMode::Exact, 200);
        PathClassSpec spec{VertexSet::all(), 0, std::nullopt, std::nullopt};
        auto paths = buildSimultaneousPaths(c, {spec}, o, 5);
        REQUIRE(paths.size() == 1);
        CHECK(paths[0].vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
        CHECK(paths[0].openEnded);
    }

    TEST_CASE("counterexample classes thread through connectors") {
        Coloring c = makeCounterexample();
        Oracle o(c, OracleMode::Exact, 500);
        PathClassSpec a{VertexSet::exactParts("A", c.blocks(), {3}), 0, std::nullopt, std::nullopt};
        PathClassSpec rest{VertexSet::exactParts("BCD", c.blocks(), {0, 1, 2}), 1, std::nullopt,
                           std::nullopt};
        auto paths = buildSimultaneousPaths(c, {a, rest}, o, 12);
        REQUIRE(paths.size() == 2);
        CHECK(verifyPowerPath(c, paths[0]).ok);
        CHECK(verifyPowerPath(c, paths[1]).ok);
        // every vertex of either class below 12 is on some path, disjointly
        std::set<Vertex> seen;
        for (const auto& p : paths)
            for (Vertex v : p.vertices) CHECK(seen.insert(v).second);
        for (Vertex v = 0; v < 12; ++v) CHECK(seen.count(v));
        // the second path must use A connectors to hop between groups
        bool connector = false;
        for (Vertex v : paths[1].vertices) connector = connector || v >= 9;
        CHECK(connector);
    }

    TEST_CASE("declared start points come first") {
        Coloring c = makeConstant(0, 2);
        Oracle o(c, OracleMode::Exact, 200);
        PathClassSpec evens{VertexSet::fromPredicate("evens", [](Vertex v) { return v % 2 == 0; }),
                            0, std::nullopt, Vertex{0}};
        PathClassSpec odds{VertexSet::fromPredicate("odds", [](Vertex v) { return v % 2 == 1; }), 0,
                           std::nullopt, Vertex{1}};
        // two classes in the same color still produce disjoint paths
        auto paths = buildSimultaneousPaths(c, {evens, odds}, o, 8);
        REQUIRE(paths.size() == 2);
        CHECK(paths[0].vertices.front() == 0);
        CHECK(paths[1].vertices.front() == 1);
    }

    TEST_CASE("target sets are visited repeatedly") {
        Coloring c = makeConstant(0, 1);
        Oracle o(c, OracleMode::Exact, 500);
        VertexSet high = VertexSet::fromPredicate("high", [](Vertex v) { return v >= 100; });
        PathClassSpec spec{VertexSet::fromPredicate("low", [](Vertex v) { return v < 100; }), 0,
                           high, std::nullopt};
        auto paths = buildSimultaneousPaths(c, {spec}, o, 20);
        long long visits = 0;
        for (Vertex v : paths[0].vertices) visits += v >= 100 ? 1 : 0;
        CHECK(visits >= 20 / 2);  // at least floor(n / 2·classes) scheduled visits
        CHECK(verifyPowerPath(c, paths[0]).ok);
    }

    TEST_CASE("cover by a single path") {
        Coloring k = makeConstant(0, 1);
        Oracle ko(k, OracleMode::Exact, 200);
        auto p = coverBySinglePath(k, VertexSet::all(), 0, ko, 10);
        CHECK(p.vertices.size() >= 10);

        Coloring c = makeCounterexample();
        Oracle co(c, OracleMode::Exact, 500);
        auto q = coverBySinglePath(c, VertexSet::exactParts("BCD", c.blocks(), {0, 1, 2}), 1, co, 9);
        CHECK(verifyPowerPath(c, q).ok);
        std::set<Vertex> got(q.vertices.begin(), q.vertices.end());
        for (Vertex v = 0; v < 9; ++v) CHECK(got.count(v));

        auto none = coverBySinglePath(c, VertexSet::fromList("empty", {}), 0, co, 9);
        CHECK(none.vertices.empty());
    }

    TEST_CASE("rado partition on the spec families") {
        Coloring k = makeConstant(0, 2);
        Oracle ko(k, OracleMode::Exact, 500);
        auto res = radoPartition(k, 20, ko);
        REQUIRE(res.pieces.size() == 2);
        CHECK(verticesOf(res.pieces[0]).size() == 20);
        CHECK(verticesOf(res.pieces[1]).empty());
        CHECK(verifyPartition(k, res).ok);

        Coloring c = makeCounterexample();
        Oracle co(c, OracleMode::Exact, 1000);
        auto cres = radoPartition(c, 30, co);
        REQUIRE(cres.pieces.size() == 2);
        CHECK(pieceColor(cres.pieces[0]) == 0);
        CHECK(pieceColor(cres.pieces[1]) == 1);
        CHECK(verifyPartition(c, cres).ok);

        Coloring s = makeSeededRandom(3, 2, 7);
        Oracle so(s, OracleMode::Scan, 5000);
        auto sres = radoPartition(s, 100, so);
        REQUIRE(sres.pieces.size() == 3);
        CHECK(verifyPartition(s, sres).ok);
    }

    TEST_CASE("every enumerated vertex is covered as soon as it is processed") {
        Coloring s = makeSeededRandom(2, 2, 21);
        Oracle so(s, OracleMode::Scan, 3000);
        for (long long n : {1, 5, 17, 40}) {
            auto res = radoPartition(s, n, so);
            std::set<Vertex> covered;
            for (const auto& p : res.pieces)
                for (Vertex v : verticesOf(p)) covered.insert(v);
            for (Vertex v = 0; v < n; ++v) CHECK(covered.count(v));
        }
    }

    TEST_CASE("streaming monotonicity piecewise") {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            Coloring s = makeSeededRandom(2, 2, seed);
            Oracle so(s, OracleMode::Scan, 3000);
            auto small = radoPartition(s, 25, so);
            auto large = radoPartition(s, 60, so);
            REQUIRE(small.pieces.size() == large.pieces.size());
            for (std::size_t i = 0; i < small.pieces.size(); ++i) {
                auto a = verticesOf(small.pieces[i]);
                auto b = verticesOf(large.pieces[i]);
                REQUIRE(a.size() <= b.size());
                CHECK(std::equal(a.begin(), a.end(), b.begin()));
            }
        }
    }

    TEST_CASE("rado within a domain keeps its pieces inside") {
        Coloring s = makeSeededRandom(2, 2, 33);
        Oracle so(s, OracleMode::Scan, 4000);
        VertexSet dom = VertexSet::fromPredicate("0mod3", [](Vertex v) { return v % 3 == 0; });
        auto res = radoPartitionWithin(s, dom, 30, so);
        std::set<Vertex> covered;
        for (const auto& p : res.pieces)
            for (Vertex v : verticesOf(p)) {
                CHECK(v % 3 == 0);
                covered.insert(v);
            }
        for (Vertex v = 0; v < 30; v += 3) CHECK(covered.count(v));
    }

    TEST_CASE("exhaustion surfaces as an error") {
        Coloring s = makeSeededRandom(2, 2, 8);
        Oracle tiny(s, OracleMode::Scan, 1);
        CHECK_THROWS_AS((void)radoPartition(s, 30, tiny), ExhaustedError);
    }
}
