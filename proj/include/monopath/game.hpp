#pragma once

#include <functional>
#include <optional>
#include <unordered_set>

#include "monopath/paths.hpp"
#include "monopath/oracle.hpp"

namespace monopath {

/// Cell (row, level) of Bob's grid: in row-major (lexicographic) order the
/// cells spell out the k-th power of a path, one level per column 0..k.
struct GridIndex {
    long long row = 0;
    int level = 0;
    friend bool operator==(const GridIndex&, const GridIndex&) = default;
};

/// The ell-th cell (1-based) in the diagonal order: (m,i) before (n,j) iff
/// m+i < n+j, ties broken by smaller level.
GridIndex triangleOrder(long long ell, int k);
long long triangleOrderInverse(const GridIndex& g, int k);

/// A covering game: host graph = edges of `hostColor`, target class W =
/// ladder[0], and ladder sets W_0..W_k promising fresh joint neighbors.
struct GameSpec {
    Coloring coloring{nullptr};
    Color hostColor = 0;
    int power = 1;
    std::vector<VertexSet> ladder;  // size power+1
    std::string name = "game";
};

struct GameMove {
    std::vector<Vertex> adam;
    std::vector<Vertex> bob;
};

struct CellPick {
    GridIndex cell;
    Vertex vertex;
};

struct GameTranscript {
    std::vector<GameMove> rounds;
    std::vector<CellPick> picks;  // in play order
    bool finished = false;        // every opened row completed to a full rectangle
    long long maxRow = -1;
    MonoPowerPath claimedPath;
    // all of W below this bound is guaranteed covered (minimum absorption);
    // nullopt = the whole of W (finite-W strategy)
    std::optional<Vertex> certifiedPrefix;
};

struct WinAudit {
    bool coverOk = false;   // condition (A) on [0,prefix)
    bool pathOk = false;    // condition (B): claimed ordering is a power path
    bool pairsOk = false;   // every picked pair within lex distance <= k is a host edge
    VerificationReport pathReport;
    std::vector<std::string> problems;
    bool won() const { return coverOk && pathOk && pairsOk; }
};

struct IllegalMoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using AdamStrategy =
    std::function<std::vector<Vertex>(long long round, const std::unordered_set<Vertex>& played)>;

AdamStrategy adamEmpty();
AdamStrategy adamRandomSets(std::uint64_t seed, int maxSize, Vertex bound);
AdamStrategy adamMinimumStealer(VertexSet target, long long horizon);
AdamStrategy adamReplayAttacker();

GameTranscript playGame(const GameSpec& spec, const AdamStrategy& adam, long long rounds,
                        const Oracle& oracle, bool finish = true);

WinAudit auditTranscript(const GameSpec& spec, const GameTranscript& t, long long prefix);

/// Runs the games simultaneously, feeding each game the other games' picks as
/// its opponent moves, then completes every grid to a full rectangle. The
/// pieces are disjoint and jointly cover every target vertex below `prefix`
/// that is not already occupied.
PartitionResult parallelCompose(const std::vector<GameSpec>& specs, long long prefix,
                                const Oracle& oracle,
                                const std::vector<Vertex>& preOccupied = {});

}  // namespace monopath
