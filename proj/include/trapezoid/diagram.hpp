#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace trapezoid {

// Trapezoid ids are 1-based throughout; coordinates are labels 1..2n.
using Vertex = std::int32_t;
using Coord = std::int32_t;

inline constexpr Vertex kNoVertex = -1;

// Corners of one trapezoid: [a, b] on the upper line, [c, d] on the lower line.
struct Trapezoid {
    Coord a = 0;
    Coord b = 0;
    Coord c = 0;
    Coord d = 0;

    friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

// Same shape with arbitrary real coordinates, before rank normalization.
struct RawTrapezoid {
    double a = 0;
    double b = 0;
    double c = 0;
    double d = 0;
};

// Returns one message per violated invariant; empty means valid.
std::vector<std::string> validate(std::span<const Trapezoid> trapezoids);

/**
 * n trapezoids whose corner labels on each line are exactly {1, ..., 2n},
 * with a < b and c < d. Immutable once built.
 */
class TrapezoidDiagram {
public:
    TrapezoidDiagram() = default;

    // Throws ValidationError carrying the full validate() report.
    explicit TrapezoidDiagram(std::vector<Trapezoid> trapezoids);

    Vertex size() const noexcept { return static_cast<Vertex>(trapezoids_.size()); }
    Coord coord_count() const noexcept { return 2 * size(); }

    const Trapezoid& operator[](Vertex v) const { return trapezoids_[static_cast<std::size_t>(v - 1)]; }
    const Trapezoid& at(Vertex v) const;

    std::span<const Trapezoid> trapezoids() const noexcept { return trapezoids_; }

    friend bool operator==(const TrapezoidDiagram&, const TrapezoidDiagram&) = default;

private:
    std::vector<Trapezoid> trapezoids_;
};

// Replaces each line's coordinates by their ranks. Rejects ties on a line
// and trapezoids with left >= right.
TrapezoidDiagram normalize(std::span<const RawTrapezoid> raw);
TrapezoidDiagram normalize(const TrapezoidDiagram& diagram);

// Uniform random perfect matching of {1..2n} on each line; pair k of both
// lines becomes trapezoid k. Deterministic in (n, seed).
TrapezoidDiagram random_diagram(Vertex n, std::uint64_t seed);

// Which trapezoid owns each label on the upper and lower line.
class PointIndex {
public:
    explicit PointIndex(const TrapezoidDiagram& diagram);

    Vertex up(Coord label) const { return up_[static_cast<std::size_t>(label - 1)]; }
    Vertex bottom(Coord label) const { return bottom_[static_cast<std::size_t>(label - 1)]; }

    std::span<const Vertex> up() const noexcept { return up_; }
    std::span<const Vertex> bottom() const noexcept { return bottom_; }

    // True when lower label y is the owner's left corner c (false: d).
    bool bottom_is_left(Coord label) const { return bottom_left_[static_cast<std::size_t>(label - 1)] != 0; }

private:
    std::vector<Vertex> up_;
    std::vector<Vertex> bottom_;
    std::vector<std::uint8_t> bottom_left_;
};

// i << j: trapezoid i lies entirely left of j.
bool lies_left_of(const TrapezoidDiagram& diagram, Vertex i, Vertex j);

// Trapezoids i and j intersect unless one lies entirely left of the other.
bool is_adjacent(const TrapezoidDiagram& diagram, Vertex i, Vertex j);

// Undirected simple graph on vertices 1..n with sorted adjacency lists.
class IntersectionGraph {
public:
    IntersectionGraph() = default;
    // Lists must be sorted, symmetric and loop-free; checked.
    explicit IntersectionGraph(std::vector<std::vector<Vertex>> adjacency);

    Vertex vertex_count() const noexcept { return static_cast<Vertex>(adjacency_.size()); }
    std::int64_t edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
    std::int64_t degree(Vertex v) const { return static_cast<std::int64_t>(neighbors(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool is_complete() const noexcept;

    // (u, v) with u < v, lexicographic.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::int64_t edge_count_ = 0;
};

// All-pairs adjacency. O(n^2).
IntersectionGraph intersection_graph(const TrapezoidDiagram& diagram);

}  // namespace trapezoid
