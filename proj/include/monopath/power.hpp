#pragma once

#include <optional>

#include "monopath/game.hpp"
#include "monopath/rado.hpp"

namespace monopath {

/// Nested vertex classes indexed by color sequences, built by iterated
/// classification of restricted colorings. Finite nodes pass themselves to
/// child 0; infinite nodes split through the classifier.
struct SetTreeNode {
    std::vector<Color> seq;
    VertexSet set = VertexSet::all();
    bool provablyFinite = false;
    std::vector<int> children;  // r entries below the leaf depth
};

struct SetTree {
    int power = 1;
    int depth = 0;  // (power-1)*r + 1
    std::vector<SetTreeNode> nodes;
    std::vector<int> leafIds() const;
    const SetTreeNode& node(int id) const { return nodes[static_cast<std::size_t>(id)]; }
};

SetTree buildSetTree(const Coloring& coloring, int power, long long prefix, const Oracle& oracle);

/// Pigeonhole on a leaf sequence: the smallest color occurring >= power
/// times, with its `power` largest positions in decreasing order.
std::pair<Color, std::vector<int>> pigeonholePositions(const std::vector<Color>& seq, int r,
                                                       int power);

/// Partition [0,prefix) into at most r^((power-1)r+1) monochromatic powers of
/// paths plus a finite leftover.
PartitionResult powerPartition(const Coloring& coloring, int power, long long prefix,
                               const Oracle& oracle);

/// Interleaves reservoir vertices into a path to lift it to a square:
/// v0,v1,w0,v2,v3,w1,... with every w jointly adjacent to its four-vertex
/// window. Protected families get one reserved witness per interleaving step,
/// round robin; witnesses never enter the square.
MonoPowerPath absorbPathIntoSquare(const Coloring& coloring, const MonoPowerPath& path,
                                   const VertexSet& reservoir,
                                   const std::vector<VertexSet>& protectedFamilies,
                                   const std::vector<Vertex>& avoid, const Oracle& oracle,
                                   std::vector<Vertex>* witnessLog = nullptr);

struct PokrovskiyResult {
    bool found = false;
    std::vector<Vertex> zeroPower;               // k-th power of a path, color 0
    std::vector<std::vector<Vertex>> onePaths;   // <= k disjoint paths, color 1
};

/// Exhaustive backtracking for the finite covering step: all of `verts` split
/// into a color-0 k-th power of a path and at most k color-1 paths. Such a
/// cover always exists, so found == false is a falsification alarm for the
/// caller.
PokrovskiyResult pokrovskiyFinite(const Coloring& coloring, const std::vector<Vertex>& verts,
                                  int k);

struct TwoPathAlarm : std::runtime_error {
    TwoPathAlarm(std::string msg, long long best) : std::runtime_error(std::move(msg)), best(best) {}
    long long best;
};

/// Exhaustive two-path split of a finite 2-colored clique: disjoint paths P0
/// (color 0) and P1 (color 1) with |P0|+|P1| maximal; the maximum always
/// equals |verts| and anything less throws TwoPathAlarm.
std::pair<std::vector<Vertex>, std::vector<Vertex>> maximalTwoPathPartition(
    const Coloring& coloring, const std::vector<Vertex>& verts);

/// Partition [0,prefix) of a 2-colored complete graph into at most 4
/// monochromatic path squares.
PartitionResult fourSquarePartition(const Coloring& coloring, long long prefix,
                                    const Oracle& oracle);

struct CounterexampleReport {
    bool twoSquareCover = true;  // expect false: 2 squares never cover the core
    int specialCount = 0;
    std::vector<long long> groupSizes;
    bool boundsAvoidingD = false;  // 0-squares missing D meet B,C at most once
    bool boundsThroughD = false;   // 0-squares through D meet B,C at most twice
    long long maxSpecialsOneZeroSquare = 0;  // best single 0-square: expect 5
    bool mixedSquaresAreColorOne = false;
    long long zeroSquaresEnumerated = 0;
    long long mixedSquaresChecked = 0;
    bool ok() const {
        return !twoSquareCover && boundsAvoidingD && boundsThroughD &&
               maxSpecialsOneZeroSquare == 5 && mixedSquaresAreColorOne;
    }
};

/// Brute-force certification of the finite core of the lower bound: the nine
/// special vertices of the counterexample coloring admit no cover by two
/// monochromatic squares, with the per-square intersection bounds audited
/// over full enumeration.
CounterexampleReport counterexampleCheck();

struct SweepOutcome {
    long long instances = 0;
    long long alarms = 0;
};

/// Every 2-coloring of the complete graph on n vertices (shard `shard` of
/// `shards`) run through pokrovskiyFinite.
SweepOutcome sweepPokrovskiyExhaustive(int n, int k, int shards = 1, int shard = 0);
SweepOutcome sweepPokrovskiySeeded(int n, int k, int count, std::uint64_t seed);

}  // namespace monopath
