#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trapezoid/diagram.hpp"

namespace trapezoid {

struct Bipartition {
    std::vector<std::uint8_t> side;  // side[v - 1] in {0, 1}
};

// Closed walk v0 v1 ... vk-1 (v0) of odd length k, no repeated vertex.
struct OddCycle {
    std::vector<Vertex> vertices;
};

std::variant<Bipartition, OddCycle> is_bipartite(const IntersectionGraph& graph);

// Lexicographically smallest triangle, if any.
std::optional<std::array<Vertex, 3>> has_triangle(const IntersectionGraph& graph);

// Spine v0 .. vd (a path) plus the pendant leaves hanging off each spine vertex.
struct CaterpillarDecomposition {
    std::vector<Vertex> spine;
    std::vector<std::vector<Vertex>> pendants;  // parallel to spine

    Vertex vertex_count() const;
};

enum class CaterpillarRefusal {
    not_a_tree,
    not_a_caterpillar,  // tree, but removing the leaves does not leave a path
};

std::string to_string(CaterpillarRefusal refusal);

/**
 * Decomposes a tree whose non-leaf vertices form a path. The spine is a
 * longest path: the inner path extended by the smallest leaf at each end,
 * oriented so that the smaller endpoint comes first. The empty graph and
 * K1 decompose trivially.
 */
std::variant<CaterpillarDecomposition, CaterpillarRefusal> is_caterpillar(const IntersectionGraph& graph);

// Interval diagram (a = c, b = d in rank order) whose trapezoid v is vertex v.
// The decomposition must cover 1..n exactly once.
TrapezoidDiagram caterpillar_to_diagram(const CaterpillarDecomposition& decomposition);

}  // namespace trapezoid
