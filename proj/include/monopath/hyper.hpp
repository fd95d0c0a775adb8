#pragma once

#include "monopath/classifier.hpp"
#include "monopath/paths.hpp"

namespace monopath {

/// A coloring of fixed-size vertex subsets derived from the host coloring,
/// e.g. x -> colorOf(x + {v}).
struct DerivedColoring {
    int arity = 1;
    int colors = 2;
    std::function<Color(std::span<const Vertex>)> colorOf;  // sorted distinct input
};

struct RamseyCertificate {
    std::vector<Vertex> homogeneousSet;
    Color color = 0;
    std::string source;
};

/// Greedy homogeneous-set extraction: stream candidates in increasing order,
/// keep one growing set per color, admit a candidate to a set when every
/// subset it completes gets that color. First set to reach targetSize wins.
/// The certificate is exhaustively rechecked before returning.
RamseyCertificate ramseyExtract(const DerivedColoring& derived, const VertexSet& within,
                                int targetSize, long long horizon);

/// Exhaustive recheck: every arity-subset of the certificate set has its color.
bool recheckCertificate(const DerivedColoring& derived, const RamseyCertificate& cert);

/// Partition [0,prefix) into at most r tight paths of distinct colors.
PartitionResult tightPathPartition(const Coloring& coloring, long long prefix, const Oracle& oracle);

/// Partition [0,prefix) into tight cycles (provably finite vertex classes,
/// exact oracles only) and windows of two-way infinite tight paths, distinct
/// colors. Under scan oracles every class is treated as infinite and only
/// window pieces are produced.
PartitionResult tightCyclePartition(const Coloring& coloring, long long prefix,
                                    const Oracle& oracle);

}  // namespace monopath
