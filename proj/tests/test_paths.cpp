#include <doctest.h>

#include <random>

#include "monopath/paths.hpp"

using namespace monopath;

TEST_SUITE("paths") {
    TEST_CASE("power path verification examples") {
        Coloring k = makeConstant(0, 1);
        CHECK(verifyPowerPath(k, {{5, 2, 9, 14}, 0, 3, false}).ok);

        Coloring c = makeCounterexample();
        CHECK(verifyPowerPath(c, {{0, 1, 2}, 1, 2, false}).ok);  // inside B
        auto bad = verifyPowerPath(c, {{0, 4, 1}, 1, 1, false});
        CHECK_FALSE(bad.ok);  // the B-C pair {0,4} is color 0
        REQUIRE(!bad.violations.empty());
        CHECK(bad.violations[0].detail.find("{0,4}") != std::string::npos);

        CHECK(verifyPowerPath(c, {{}, 0, 2, false}).ok);
        CHECK(verifyPowerPath(c, {{7}, 0, 2, false}).ok);
        CHECK_FALSE(verifyPowerPath(c, {{1, 1}, 1, 1, false}).ok);
    }

    TEST_CASE("power path verification is the brute pair loop") {
        Coloring c = makeSeededRandom(2, 2, 31);
        std::mt19937_64 rng(4);
        for (int trial = 0; trial < 50; ++trial) {
            // grow a genuinely valid piece greedily, then check both verdicts
            int power = 1 + static_cast<int>(rng() % 3);
            Color col = static_cast<Color>(rng() % 2);
            std::vector<Vertex> vs;
            for (Vertex w = 0; vs.size() < 6 && w < 4000; ++w) {
                bool ok = true;
                for (std::size_t back = 1; back <= static_cast<std::size_t>(power) && back <= vs.size(); ++back)
                    ok = ok && c.colorOfPair(w, vs[vs.size() - back]) == col;
                if (ok) vs.push_back(w);
            }
            REQUIRE(vs.size() == 6);
            MonoPowerPath piece{vs, col, power, false};
            CHECK(verifyPowerPath(c, piece).ok);
            // mutate one vertex so that a within-range pair flips color
            std::size_t at = 1 + rng() % 4;
            for (Vertex w = 3000; w < 4000; ++w) {
                MonoPowerPath mutant = piece;
                mutant.vertices[at] = w;
                if (c.colorOfPair(w, mutant.vertices[at - 1]) != col) {
                    CHECK_FALSE(verifyPowerPath(c, mutant).ok);
                    break;
                }
            }
        }
    }

    TEST_CASE("tight piece verification") {
        Coloring c = makeConstant(1, 2, 3);
        CHECK(verifyTight(c, {{0, 1, 2, 3, 4}, 1, 3, TightPiece::Shape::Path}).ok);
        CHECK(verifyTight(c, {{0, 1, 2, 3}, 1, 3, TightPiece::Shape::Cycle}).ok);
        CHECK_FALSE(verifyTight(c, {{0, 1, 2}, 0, 3, TightPiece::Shape::Path}).ok);
        // too short to wrap as a cycle
        CHECK_FALSE(verifyTight(c, {{0, 1}, 1, 3, TightPiece::Shape::Cycle}).ok);
        CHECK(verifyTight(c, {{}, 1, 3, TightPiece::Shape::Cycle}).ok);
        // short paths are vacuous
        CHECK(verifyTight(c, {{0, 1}, 1, 3, TightPiece::Shape::Path}).ok);
        // uniformity mismatch
        Coloring c2 = makeConstant(1, 2, 2);
        CHECK_FALSE(verifyTight(c2, {{0, 1, 2}, 1, 3, TightPiece::Shape::Path}).ok);
    }

    TEST_CASE("cycle wrap windows are checked") {
        Coloring c = makeMinThreshold(3, 4);
        // x vertices from the low block, fillers high: valid cycle of color 1
        TightPiece cyc{{0, 10, 11, 1, 12, 13}, 1, 3, TightPiece::Shape::Cycle};
        CHECK(verifyTight(c, cyc).ok);
        // breaking one filler to a low vertex keeps color 1 windows... replace
        // an x cell with a high vertex instead: the window {10,11,14} is color 0
        TightPiece badCyc{{14, 10, 11, 1, 12, 13}, 1, 3, TightPiece::Shape::Cycle};
        CHECK_FALSE(verifyTight(c, badCyc).ok);
    }

    TEST_CASE("partition verification") {
        Coloring k = makeConstant(0, 1);
        PartitionResult res;
        res.prefix = 10;
        MonoPowerPath p;
        for (Vertex v = 0; v < 10; ++v) p.vertices.push_back(v);
        p.color = 0;
        p.power = 1;
        res.pieces.emplace_back(p);
        CHECK(verifyPartition(k, res).ok);

        // sharing a vertex across pieces
        PartitionResult shared = res;
        shared.pieces.emplace_back(MonoPowerPath{{7, 12}, 0, 1, false});
        auto rep = verifyPartition(k, shared);
        CHECK_FALSE(rep.ok);
        bool sawDisjoint = false;
        for (const auto& v : rep.violations) sawDisjoint = sawDisjoint || v.kind == "disjointness";
        CHECK(sawDisjoint);

        // coverage gap at 3
        PartitionResult gap = res;
        std::get<MonoPowerPath>(gap.pieces[0]).vertices = {0, 1, 2, 4, 5, 6, 7, 8, 9};
        rep = verifyPartition(k, gap);
        CHECK_FALSE(rep.ok);
        bool sawGap = false;
        for (const auto& v : rep.violations)
            sawGap = sawGap || (v.kind == "coverage-gap" && v.detail == "3");
        CHECK(sawGap);

        // leftover covers the gap
        gap.leftover = {3};
        CHECK(verifyPartition(k, gap).ok);

        // duplicate colors flagged only when required
        PartitionResult dup;
        dup.prefix = 0;
        dup.pieces.emplace_back(MonoPowerPath{{0}, 0, 1, false});
        dup.pieces.emplace_back(MonoPowerPath{{1}, 0, 1, false});
        CHECK(verifyPartition(k, dup).ok);
        dup.distinctColors = true;
        CHECK_FALSE(verifyPartition(k, dup).ok);
    }

    TEST_CASE("end extension") {
        Coloring k = makeConstant(0, 1);
        MonoPowerPath base{{0, 1}, 0, 2, false};
        MonoPowerPath grown = endExtend(base, std::vector<Vertex>{2, 3}, k);
        CHECK(grown.vertices == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(verifyPowerPath(k, grown).ok);

        Coloring c = makeCounterexample();
        MonoPowerPath bpath{{0, 1}, 1, 1, false};
        CHECK_THROWS_AS((void)endExtend(bpath, std::vector<Vertex>{4}, c), ExtensionError);
        try {
            (void)endExtend(bpath, std::vector<Vertex>{4}, c);
        } catch (const ExtensionError& e) {
            CHECK(e.first == 1);
            CHECK(e.second == 4);
        }

        MonoPowerPath same = endExtend(bpath, std::vector<Vertex>{}, c);
        CHECK(same.vertices == bpath.vertices);
    }

    TEST_CASE("end extension is associative") {
        Coloring c = makeSeededRandom(2, 2, 77);
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 30; ++trial) {
            Color col = static_cast<Color>(rng() % 2);
            std::vector<Vertex> vs;
            for (Vertex w = 0; vs.size() < 7 && w < 5000; ++w) {
                bool ok = true;
                for (std::size_t back = 1; back <= 2 && back <= vs.size(); ++back)
                    ok = ok && c.colorOfPair(w, vs[vs.size() - back]) == col;
                if (ok) vs.push_back(w);
            }
            REQUIRE(vs.size() == 7);
            MonoPowerPath p{{vs[0], vs[1], vs[2]}, col, 2, false};
            std::vector<Vertex> q{vs[3], vs[4]};
            std::vector<Vertex> r{vs[5], vs[6]};
            auto oneStep = endExtend(endExtend(p, q, c), r, c);
            std::vector<Vertex> qr = q;
            qr.insert(qr.end(), r.begin(), r.end());
            auto twoStep = endExtend(p, qr, c);
            CHECK(oneStep.vertices == twoStep.vertices);
        }
    }
}
