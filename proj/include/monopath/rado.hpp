#pragma once

#include <optional>

#include "monopath/classifier.hpp"
#include "monopath/paths.hpp"

namespace monopath {

/// One class handed to the simultaneous path builder: cover C in color i,
/// keep visiting targets A when declared infinite, start at `start` if given.
struct PathClassSpec {
    VertexSet members = VertexSet::all();  // C_j
    Color color = 0;                       // i_j
    std::optional<VertexSet> targets;      // A_j
    std::optional<Vertex> start;
};

/// Builds pairwise disjoint paths, one per class, so that every vertex of
/// some class below `prefix` ends up on a path. Two phases per enumeration
/// step: cover the enumerated vertex, then revisit each declared-infinite
/// target set. Connectors come from `connectorBase`, smallest admissible
/// first.
std::vector<MonoPowerPath> buildSimultaneousPaths(const Coloring& coloring,
                                                  const std::vector<PathClassSpec>& classes,
                                                  const Oracle& oracle, long long prefix,
                                                  const VertexSet& connectorBase = VertexSet::all());

MonoPowerPath coverBySinglePath(const Coloring& coloring, const VertexSet& klass, Color color,
                                const Oracle& oracle, long long prefix);

/// Partition [0,prefix) into exactly r paths of distinct colors.
PartitionResult radoPartition(const Coloring& coloring, long long prefix, const Oracle& oracle);

/// Same, restricted to a vertex class: covers domain ∩ [0,prefix) with r
/// paths whose vertices (including connectors) stay inside the domain.
PartitionResult radoPartitionWithin(const Coloring& coloring, const VertexSet& domain,
                                    long long prefix, const Oracle& oracle);

}  // namespace monopath
