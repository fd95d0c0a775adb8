#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "monopath/coloring.hpp"

namespace monopath {

/// Finite witness for a monochromatic k-th power of a path. openEnded marks a
/// certified prefix of a one-way infinite path.
struct MonoPowerPath {
    std::vector<Vertex> vertices;
    Color color = 0;
    int power = 1;
    bool openEnded = false;
};

/// Tight path / tight cycle / window of a two-way infinite tight path in a
/// k-uniform coloring: every k consecutive vertices (cyclically, for cycles)
/// form an edge of the piece color.
struct TightPiece {
    enum class Shape { Path, Cycle, TwoWayWindow };
    std::vector<Vertex> vertices;
    Color color = 0;
    int uniformity = 2;
    Shape shape = Shape::Path;
};

using Piece = std::variant<MonoPowerPath, TightPiece>;

struct PartitionResult {
    std::vector<Piece> pieces;
    std::vector<Vertex> leftover;
    long long prefix = 0;
    bool distinctColors = false;
};

struct Violation {
    std::string kind;
    std::string detail;
};

struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;
    long long leftoverSize = 0;
    void add(std::string kind, std::string detail) {
        ok = false;
        violations.push_back({std::move(kind), std::move(detail)});
    }
    std::string summary() const;
};

/// Checks every pair at sequence distance <= power against colorOf. This loop
/// is the definition; builders are never consulted.
VerificationReport verifyPowerPath(const Coloring& c, const MonoPowerPath& piece);

VerificationReport verifyTight(const Coloring& c, const TightPiece& piece);

VerificationReport verifyPartition(const Coloring& c, const PartitionResult& result);

struct ExtensionError : std::runtime_error {
    ExtensionError(std::string msg, Vertex a, Vertex b)
        : std::runtime_error(std::move(msg)), first(a), second(b) {}
    Vertex first, second;
};

/// Concatenates extension onto base, revalidating every new pair within
/// `power` of the seam. Throws ExtensionError with the offending pair.
MonoPowerPath endExtend(const MonoPowerPath& base, std::span<const Vertex> extension,
                        const Coloring& c);

std::vector<Vertex> pieceVertices(const Piece& p);
Color pieceColor(const Piece& p);

}  // namespace monopath
