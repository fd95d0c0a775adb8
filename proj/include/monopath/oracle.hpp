#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monopath/coloring.hpp"

namespace monopath {

enum class Cardinality { Finite, Infinite, Unknown };

/// A vertex-set descriptor: a total membership predicate, plus an exact
/// block-level form when the underlying coloring is block-structured. The
/// exact form is what lets the oracle prove emptiness and finiteness.
class VertexSet {
public:
    static VertexSet all();
    static VertexSet fromPredicate(std::string name, std::function<bool(Vertex)> pred);
    static VertexSet fromList(std::string name, std::vector<Vertex> members);
    static VertexSet exactParts(std::string name,
                                std::shared_ptr<const BlockStructure> structure,
                                std::vector<int> blocks,
                                std::vector<Vertex> plus = {},
                                std::vector<Vertex> minus = {});

    bool contains(Vertex v) const;
    Cardinality cardinality() const;
    const std::string& name() const;

    bool isAll() const { return kind_ == Kind::All; }
    bool isExact() const { return kind_ == Kind::Parts || kind_ == Kind::List; }

    /// Members in increasing order; only valid when cardinality() == Finite.
    std::vector<Vertex> materialize() const;

    /// This set minus a finite list of vertices.
    VertexSet minus(const std::vector<Vertex>& removed) const;

    // exact-form accessors (Parts kind)
    const std::vector<int>& partBlocks() const { return blocks_; }
    const std::vector<Vertex>& partPlus() const { return plus_; }
    const std::vector<Vertex>& partMinus() const { return minus_; }
    std::shared_ptr<const BlockStructure> structure() const { return structure_; }
    const std::vector<Vertex>& listMembers() const { return list_; }

    /// Lift an "all" set to exact parts over a structure (identity otherwise).
    VertexSet withStructure(std::shared_ptr<const BlockStructure> structure) const;

private:
    enum class Kind { All, Pred, List, Parts };
    Kind kind_ = Kind::All;
    std::string name_ = "all";
    std::function<bool(Vertex)> pred_;
    std::vector<Vertex> list_;  // sorted
    std::shared_ptr<const BlockStructure> structure_;
    std::vector<int> blocks_;
    std::vector<Vertex> plus_, minus_;  // sorted
};

struct LargenessQuery {
    VertexSet base = VertexSet::all();
    // pair constraints: returned w must satisfy colorOf({v,w}) == i
    std::vector<std::pair<Vertex, Color>> adjacentTo;
    std::vector<Vertex> exclude;
    long long horizon = 0;  // 0 = oracle default
};

struct OracleResult {
    enum class Status { Found, Empty, Exhausted };
    Status status = Status::Exhausted;
    Vertex vertex = -1;
    bool found() const { return status == Status::Found; }
};

/// Thrown when a builder needs a fresh vertex and the oracle cannot supply
/// one; carries enough of the query to diagnose the failure.
struct ExhaustedError : std::runtime_error {
    ExhaustedError(std::string context, std::string queryText, bool provedEmpty);
    std::string context;
    std::string queryText;
    bool provedEmpty;
};

enum class OracleMode { Exact, Scan };

long long defaultHorizonFor(long long prefix);

/// Produces fresh vertices satisfying joint color-neighborhood constraints.
/// Scan mode tests 0,1,2,... up to the horizon (sound, complete up to the
/// horizon). Exact mode answers in closed form on block-structured families
/// and can prove a query empty.
class Oracle {
public:
    Oracle(Coloring coloring, OracleMode mode, long long defaultHorizon);

    OracleResult fresh(const LargenessQuery& q) const;
    Vertex freshOrThrow(const LargenessQuery& q, const std::string& context) const;

    OracleMode mode() const { return mode_; }
    long long horizon() const { return defaultHorizon_; }
    const Coloring& coloring() const { return coloring_; }

    /// Exact mode on a structured family, used where scan cannot decide.
    bool exactCapable() const;

private:
    OracleResult scan(const LargenessQuery& q) const;
    OracleResult exact(const LargenessQuery& q) const;

    Coloring coloring_;
    OracleMode mode_;
    long long defaultHorizon_;
};

std::string describeQuery(const LargenessQuery& q);

}  // namespace monopath
