// Acceptance suite: one pass/fail line per criterion, exit code = failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "monopath/hyper.hpp"
#include "monopath/json_io.hpp"

using namespace monopath;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

std::string secText(double s) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << "s";
    return os.str();
}

// ---------------------------------------------------------------- criterion 1
void radoCriterion() {
    const long long prefix = 200, horizon = 5000;
    double worst = 0;
    std::string err;
    for (int i = 0; i < 100 && err.empty(); ++i) {
        int r = 2 + i % 3;
        Coloring c = makeSeededRandom(r, 2, static_cast<std::uint64_t>(i));
        Oracle oracle(c, OracleMode::Scan, horizon);
        auto t0 = Clock::now();
        try {
            PartitionResult res = radoPartition(c, prefix, oracle);
            if (static_cast<int>(res.pieces.size()) != r) {
                err = "seed " + std::to_string(i) + ": piece count " +
                      std::to_string(res.pieces.size()) + " != r = " + std::to_string(r);
                break;
            }
            std::set<Color> colors;
            for (const auto& p : res.pieces) colors.insert(pieceColor(p));
            if (static_cast<int>(colors.size()) != r) err = "seed " + std::to_string(i) + ": repeated colors";
            auto rep = verifyPartition(c, res);
            if (!rep.ok) err = "seed " + std::to_string(i) + ": " + rep.summary();
        } catch (const ExhaustedError& e) {
            err = "seed " + std::to_string(i) + " exhausted: " + e.context;
        }
        worst = std::max(worst, seconds(t0, Clock::now()));
        if (worst >= 2.0) err = "seed " + std::to_string(i) + " took " + secText(worst);
    }
    report(1, err.empty(), "100 seeded colorings, r in {2,3,4}: exactly r verified paths of distinct colors",
           err.empty() ? "max " + secText(worst) + " per instance" : err);
}

// ---------------------------------------------------------------- criterion 2
void streamingCriterion() {
    std::string err;
    for (std::uint64_t seed = 0; seed < 20 && err.empty(); ++seed) {
        Coloring c = makeSeededRandom(2 + static_cast<int>(seed % 3), 2, seed * 31 + 5);
        Oracle oracle(c, OracleMode::Scan, 5000);
        PartitionResult prev;
        bool first = true;
        for (long long n : {50, 100, 200}) {
            PartitionResult cur = radoPartition(c, n, oracle);
            if (!first) {
                if (cur.pieces.size() != prev.pieces.size()) {
                    err = "piece count changed at seed " + std::to_string(seed);
                    break;
                }
                for (std::size_t j = 0; j < cur.pieces.size(); ++j) {
                    auto small = pieceVertices(prev.pieces[j]);
                    auto large = pieceVertices(cur.pieces[j]);
                    if (small.size() > large.size() ||
                        !std::equal(small.begin(), small.end(), large.begin())) {
                        err = "seed " + std::to_string(seed) + " piece " + std::to_string(j) +
                              " is not an end extension";
                        break;
                    }
                }
            }
            first = false;
            prev = std::move(cur);
        }
    }
    report(2, err.empty(), "prefixes 50 -> 100 -> 200 end-extend piecewise with no migration", err);
}

// ---------------------------------------------------------------- criterion 3
void tightCriterion() {
    double worst = 0;
    std::string err;
    for (std::uint64_t seed = 0; seed < 20 && err.empty(); ++seed) {
        Coloring c = makeSeededRandom(2, 3, seed * 7 + 1);
        Oracle oracle(c, OracleMode::Scan, 5000);
        auto t0 = Clock::now();
        try {
            PartitionResult res = tightPathPartition(c, 30, oracle);
            if (res.pieces.size() > 2) err = "more than two pieces at seed " + std::to_string(seed);
            std::set<Color> colors;
            for (const auto& p : res.pieces) {
                if (!colors.insert(pieceColor(p)).second) err = "repeated colors";
                if (!verifyTight(c, std::get<TightPiece>(p)).ok)
                    err = "window recheck failed at seed " + std::to_string(seed);
            }
            if (!verifyPartition(c, res).ok) err = "coverage failed at seed " + std::to_string(seed);
        } catch (const ExhaustedError& e) {
            err = "seed " + std::to_string(seed) + " exhausted: " + e.context;
        }
        worst = std::max(worst, seconds(t0, Clock::now()));
        if (worst >= 10.0) err = "instance took " + secText(worst);
    }
    // the same engine at uniformity two passes the path verifier
    for (std::uint64_t seed = 0; seed < 20 && err.empty(); ++seed) {
        Coloring c = makeSeededRandom(2, 2, seed * 13 + 3);
        Oracle oracle(c, OracleMode::Scan, 5000);
        PartitionResult res = tightPathPartition(c, 30, oracle);
        PartitionResult asPaths;
        asPaths.prefix = res.prefix;
        asPaths.distinctColors = true;
        asPaths.leftover = res.leftover;
        for (const auto& p : res.pieces) {
            const auto& t = std::get<TightPiece>(p);
            asPaths.pieces.emplace_back(MonoPowerPath{t.vertices, t.color, 1, false});
        }
        if (!verifyPartition(c, asPaths).ok)
            err = "uniformity-2 output rejected by the path verifier at seed " + std::to_string(seed);
    }
    report(3, err.empty(),
           "20 seeded 3-uniform colorings split into <= 2 verified tight paths; k=2 output passes the path verifier",
           err.empty() ? "max " + secText(worst) + " per instance" : err);
}

// ---------------------------------------------------------------- criterion 4
void gameCriterion() {
    std::string err;
    // the published play-order anchors for k = 2
    if (!(triangleOrder(12, 2) == GridIndex{2, 2} && triangleOrder(7, 2) == GridIndex{3, 0} &&
          triangleOrder(11, 2) == GridIndex{3, 1} && triangleOrder(8, 2) == GridIndex{2, 1} &&
          triangleOrder(4, 2) == GridIndex{2, 0}))
        err = "triangle-order anchors do not match";

    Coloring constant = makeConstant(0, 1);
    Coloring counter = makeCounterexample();
    VertexSet a = VertexSet::exactParts("A", counter.blocks(), {3});
    std::vector<GameSpec> hosts{
        {constant, 0, 2, {VertexSet::all(), VertexSet::all(), VertexSet::all()}, "constant"},
        {counter, 0, 2, {a, a, a}, "counterexample"}};
    for (const auto& host : hosts) {
        if (!err.empty()) break;
        Oracle oracle(host.coloring, OracleMode::Exact, 5000);
        for (std::uint64_t seed = 0; seed < 10 && err.empty(); ++seed) {
            GameTranscript t = playGame(host, adamRandomSets(seed, 3, 120), 50, oracle);
            long long prefix = t.certifiedPrefix.value_or(0);
            WinAudit audit = auditTranscript(host, t, prefix);
            if (prefix <= 0) err = host.name + ": no certified coverage prefix";
            if (!audit.coverOk) err = host.name + ": condition (A) failed at seed " + std::to_string(seed);
            if (!audit.pathOk) err = host.name + ": claimed path failed verification";
            if (!audit.pairsOk) err = host.name + ": a close pair misses the host color";
        }
    }
    report(4, err.empty(),
           "grid strategy beats the random opponent on both hosts; play-order anchors exact", err);
}

// ---------------------------------------------------------------- criterion 5
void powerCriterion() {
    double worst = 0;
    std::string err;
    for (int i = 0; i < 50 && err.empty(); ++i) {
        Coloring c = makeSeededRandom(2, 2, static_cast<std::uint64_t>(i) * 3 + 2);
        Oracle oracle(c, OracleMode::Scan, defaultHorizonFor(60));
        auto t0 = Clock::now();
        try {
            PartitionResult res = powerPartition(c, 2, 60, oracle);
            if (res.pieces.size() > 8)
                err = "seed " + std::to_string(i) + ": " + std::to_string(res.pieces.size()) +
                      " pieces exceed the bound 8";
            if (!verifyPartition(c, res).ok) err = "verification failed at seed " + std::to_string(i);
            if (res.leftover.size() > 60) err = "leftover too large";
        } catch (const ExhaustedError& e) {
            err = "seed " + std::to_string(i) + " exhausted: " + e.context;
        }
        worst = std::max(worst, seconds(t0, Clock::now()));
        if (worst >= 5.0) err = "instance took " + secText(worst);
    }
    report(5, err.empty(), "50 seeded colorings: at most 8 = 2^3 verified squares plus a finite leftover",
           err.empty() ? "max " + secText(worst) + " per instance" : err);
}

// ---------------------------------------------------------------- criterion 6
void fourSquareCriterion() {
    std::string err;
    Coloring counter = makeCounterexample();
    Oracle exact(counter, OracleMode::Exact, 2000);
    try {
        PartitionResult res = fourSquarePartition(counter, 40, exact);
        if (res.pieces.size() > 4) err = "counterexample: more than 4 squares";
        if (!verifyPartition(counter, res).ok) err = "counterexample: verification failed";
    } catch (const std::exception& e) {
        err = std::string("counterexample: ") + e.what();
    }
    for (int i = 0; i < 50 && err.empty(); ++i) {
        Coloring c = makeSeededRandom(2, 2, static_cast<std::uint64_t>(i) * 11 + 7);
        Oracle oracle(c, OracleMode::Scan, defaultHorizonFor(60));
        try {
            PartitionResult res = fourSquarePartition(c, 60, oracle);
            if (res.pieces.size() > 4) err = "seed " + std::to_string(i) + ": more than 4 squares";
            for (const auto& p : res.pieces)
                if (std::get<MonoPowerPath>(p).power != 2) err = "piece is not a square";
            if (!verifyPartition(c, res).ok) err = "verification failed at seed " + std::to_string(i);
        } catch (const ExhaustedError& e) {
            err = "seed " + std::to_string(i) + " exhausted: " + e.context;
        }
    }
    report(6, err.empty(),
           "counterexample prefix 40 and 50 seeded colorings partition into <= 4 verified squares", err);
}

// ---------------------------------------------------------------- criterion 7
void sharpnessCriterion() {
    auto t0 = Clock::now();
    CounterexampleReport rep = counterexampleCheck();
    double took = seconds(t0, Clock::now());
    std::string err;
    if (rep.twoSquareCover) err = "two squares covered the nine specials";
    if (!rep.boundsAvoidingD) err = "a 0-square missing D meets B or C twice";
    if (!rep.boundsThroughD) err = "a 0-square through D meets B or C three times";
    if (rep.maxSpecialsOneZeroSquare != 5)
        err = "best single 0-square covers " + std::to_string(rep.maxSpecialsOneZeroSquare) +
              " specials, expected 5";
    if (!rep.mixedSquaresAreColorOne) err = "a color-0 square meets both sides";
    if (took >= 60.0) err = "enumeration took " + secText(took);
    report(7, err.empty(), "no 2-square cover of the sharpness core; intersection bounds enumerated",
           err.empty() ? secText(took) : err);
}

// ---------------------------------------------------------------- criterion 8
void sweepCriterion() {
    auto t0 = Clock::now();
    SweepOutcome k6 = sweepPokrovskiyExhaustive(6, 2);
    SweepOutcome k10 = sweepPokrovskiySeeded(10, 2, 500, 2024);
    double took = seconds(t0, Clock::now());
    std::string err;
    if (k6.instances != 32768) err = "exhaustive sweep ran " + std::to_string(k6.instances) + " instances";
    if (k6.alarms != 0) err = std::to_string(k6.alarms) + " alarms over K6";
    if (k10.instances != 500 || k10.alarms != 0) err = "seeded sweep alarms";
    if (took >= 600.0) err = "sweep took " + secText(took);
    report(8, err.empty(), "all 32768 colorings of K6 and 500 seeded K10 instances cover without alarms",
           err.empty() ? secText(took) : err);
}

// ---------------------------------------------------------------- criterion 9
void verifierCriterion() {
    std::string err;
    long long mutationsRun = 0, detected = 0;
    for (std::uint64_t seed = 0; seed < 30 && err.empty(); ++seed) {
        int r = 2 + static_cast<int>(seed % 2);
        Coloring c = makeSeededRandom(r, 2, seed + 101);
        Oracle oracle(c, OracleMode::Scan, 3000);
        PartitionResult base = radoPartition(c, 40, oracle);
        if (!verifyPartition(c, base).ok) {
            err = "false reject of a clean partition at seed " + std::to_string(seed);
            break;
        }
        // indices of pieces with enough vertices to mutate
        std::vector<std::size_t> rich;
        for (std::size_t i = 0; i < base.pieces.size(); ++i)
            if (pieceVertices(base.pieces[i]).size() >= 2) rich.push_back(i);
        if (rich.empty()) continue;
        for (int m = 0; m < 34 && err.empty(); ++m) {
            PartitionResult mutant = base;
            std::size_t at = rich[static_cast<std::size_t>(m) % rich.size()];
            auto& piece = std::get<MonoPowerPath>(mutant.pieces[at]);
            int kind = m % 3;
            if (kind == 0) {
                // duplicate one vertex into another piece (or itself)
                Vertex v = piece.vertices[static_cast<std::size_t>(m) % piece.vertices.size()];
                std::size_t to = (at + 1) % mutant.pieces.size();
                std::get<MonoPowerPath>(mutant.pieces[to]).vertices.push_back(v);
            } else if (kind == 1) {
                // remove a covered vertex entirely
                std::size_t pick = static_cast<std::size_t>(m) % piece.vertices.size();
                bool found = false;
                for (std::size_t off = 0; off < piece.vertices.size(); ++off) {
                    std::size_t j = (pick + off) % piece.vertices.size();
                    if (piece.vertices[j] < mutant.prefix) {
                        piece.vertices.erase(piece.vertices.begin() + static_cast<long>(j));
                        found = true;
                        break;
                    }
                }
                if (!found) continue;
            } else {
                // recolor a piece with at least one consecutive pair
                piece.color = (piece.color + 1) % r;
            }
            ++mutationsRun;
            if (!verifyPartition(c, mutant).ok)
                ++detected;
            else
                err = "undetected mutation kind " + std::to_string(kind) + " at seed " +
                      std::to_string(seed);
        }
    }
    if (err.empty() && mutationsRun < 1000)
        err = "only " + std::to_string(mutationsRun) + " mutations exercised";
    report(9, err.empty(), "mutation sweep over verified partitions",
           err.empty() ? std::to_string(detected) + "/" + std::to_string(mutationsRun) +
                             " mutations detected, zero false accepts"
                       : err);
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    struct Entry {
        int number;
        void (*fn)();
    };
    Entry entries[] = {{1, radoCriterion},     {2, streamingCriterion}, {3, tightCriterion},
                       {4, gameCriterion},     {5, powerCriterion},     {6, fourSquareCriterion},
                       {7, sharpnessCriterion}, {8, sweepCriterion},    {9, verifierCriterion}};
    for (const auto& e : entries) {
        try {
            e.fn();
        } catch (const std::exception& ex) {
            report(e.number, false, "criterion aborted", ex.what());
        }
    }
    std::printf("%d of 9 criteria passed in %s\n", 9 - failures, secText(seconds(t0, Clock::now())).c_str());
    return failures == 0 ? 0 : 1;
}
