#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monopath {

// Vertices are elements of the natural numbers.
using Vertex = long long;
using Color = int;

struct ArityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed-form description of a coloring whose edge colors depend only on
/// which block each endpoint lies in. Blocks partition the naturals; each is
/// either an explicit finite set or a residue class with a lower bound.
struct BlockStructure {
    struct Block {
        bool finite = true;
        std::vector<Vertex> members;            // finite blocks, sorted
        Vertex lo = 0;                          // infinite blocks: {v >= lo : v % mod == rem}
        Vertex mod = 1;
        Vertex rem = 0;
        bool contains(Vertex v) const;
    };

    std::vector<Block> blocks;
    // color per sorted multiset of block ids; a missing entry means no such
    // edge exists (single-member block paired with itself)
    std::map<std::vector<int>, Color> pattern;

    int blockOf(Vertex v) const;  // -1 if outside every block
    std::optional<Color> patternColor(std::vector<int> ids) const;
    // the distinguished infinite block used as the classifier's filter seat
    int seatBlock() const;
    int seatAmong(const std::vector<int>& blockIds) const;  // -1 if all finite
};

namespace detail {
struct ColoringImpl;
}

/// A total edge coloring of the complete k-uniform hypergraph on the naturals
/// (or on a declared finite universe for file-backed colorings). Immutable
/// value; cheap to copy.
class Coloring {
public:
    int colors() const;      // r
    int uniformity() const;  // k
    const std::string& tag() const;
    std::optional<long long> universe() const;  // file-backed only
    std::shared_ptr<const BlockStructure> blocks() const;

    /// Color of a k-element vertex set. Throws ArityError on wrong size or
    /// repeated vertices, DomainError outside a declared universe.
    Color colorOf(std::span<const Vertex> edge) const;
    Color colorOf(std::initializer_list<Vertex> edge) const;
    Color colorOfPair(Vertex a, Vertex b) const;

    explicit Coloring(std::shared_ptr<const detail::ColoringImpl> impl);

private:
    std::shared_ptr<const detail::ColoringImpl> impl_;
};

Coloring makeConstant(Color value, int r, int k = 2);
Coloring makeSeededRandom(int r, int k, std::uint64_t seed);
Coloring makeBlockBipartite();
Coloring makeCounterexample();
// 2 colors, k-uniform: color 1 iff min(edge) < threshold
Coloring makeMinThreshold(int k, Vertex threshold);
// explicit pair coloring on [0,n), row-major over pairs i<j
Coloring makeFinitePairColoring(long long n, int r, std::vector<Color> pairColors);
Coloring makeFromFile(const std::string& path);
Coloring readColoringText(std::istream& in);
void writeColoringText(const Coloring& c, long long n, std::ostream& out);

/// View of a coloring with colors renamed through perm (perm[old] = new).
Coloring permuteColors(const Coloring& base, std::vector<Color> perm);

/// Parse "family[:p1,p2,...]" strings, e.g. "constant:0", "seeded-random:2,2,42",
/// "counterexample", "block-bipartite", "min-threshold:3,4", "file:/path".
Coloring parseColoringSpec(const std::string& spec,
                           std::optional<int> rOverride = std::nullopt,
                           std::optional<int> kOverride = std::nullopt);

// stated hash behind seeded-random: splitmix64 folded over (seed, sorted edge)
std::uint64_t mix64(std::uint64_t x);

}  // namespace monopath
