#pragma once

#include <map>
#include <memory>

#include "monopath/oracle.hpp"

namespace monopath {

enum class Provenance { Exact, Density };

/// Assigns every vertex the color of its "large" neighborhood and singles out
/// the special color whose class is itself large. Exact on block-structured
/// families (the family's distinguished infinite block acts as the filter
/// seat); a prefix-density heuristic otherwise. Class values are pinned on
/// first computation, so repeated queries agree across growing prefixes.
class Classification {
public:
    Color vertexClass(Vertex v) const;  // the per-vertex neighborhood color
    Color specialColor() const;
    VertexSet classOf(Color i) const;
    const VertexSet& domain() const;
    Provenance provenance() const;
    long long horizon() const;
    std::map<Vertex, Color> classMapPrefix(long long n) const;

    struct State;
    explicit Classification(std::shared_ptr<State> state);

private:
    std::shared_ptr<State> state_;
};

/// Classify a 2-uniform coloring on the whole vertex set.
Classification classify(const Coloring& coloring, long long prefix, const Oracle& oracle);

/// Classify the restriction of the coloring to `domain` (which must be exact
/// for exact-mode classification; density mode works for any domain).
Classification classifyWithin(const Coloring& coloring, const VertexSet& domain, long long prefix,
                              const Oracle& oracle);

/// Smallest vertex i-adjacent to every element of F, inside restrictTo,
/// outside exclude.
OracleResult jointNeighborhood(const Coloring& coloring, const std::vector<Vertex>& F, Color i,
                               const VertexSet& restrictTo, const std::vector<Vertex>& exclude,
                               const Oracle& oracle);

/// Class color of a vertex in a k-uniform block family: the color every edge
/// {v} + (k-1 seat vertices) takes. Used by the tight-cycle construction.
Color hyperVertexClass(const BlockStructure& st, int k, Vertex v, int seat);

}  // namespace monopath
