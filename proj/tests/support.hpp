#pragma once

// Test-only helpers: independent checks that do not go through the
// library's own adjacency or cut logic.

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "trapezoid/diagram.hpp"
#include "trapezoid/structure.hpp"

namespace support {

using trapezoid::Vertex;

inline std::string fixture(const std::string& name) { return std::string(TRAPEZOID_FIXTURES) + "/" + name; }

struct Point {
    std::int64_t x;
    std::int64_t y;
};

// Closed convex polygons (counter-clockwise or clockwise) intersect iff no
// edge normal of either separates them.
inline bool convex_polygons_intersect(std::span<const Point> p, std::span<const Point> q) {
    auto separated_by_edges_of = [](std::span<const Point> poly, std::span<const Point> a, std::span<const Point> b) {
        for (std::size_t k = 0; k < poly.size(); ++k) {
            const Point& s = poly[k];
            const Point& t = poly[(k + 1) % poly.size()];
            const std::int64_t nx = t.y - s.y;
            const std::int64_t ny = s.x - t.x;
            auto range = [&](std::span<const Point> ps) {
                std::int64_t lo = nx * ps[0].x + ny * ps[0].y, hi = lo;
                for (const Point& pt : ps) {
                    const std::int64_t v = nx * pt.x + ny * pt.y;
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                return std::pair{lo, hi};
            };
            const auto [alo, ahi] = range(a);
            const auto [blo, bhi] = range(b);
            if (ahi < blo || bhi < alo) return true;
        }
        return false;
    };
    return !separated_by_edges_of(p, p, q) && !separated_by_edges_of(q, p, q);
}

// Trapezoid as a quadrilateral with the upper line at y = 1, lower at y = 0.
inline std::array<Point, 4> quadrilateral(const trapezoid::Trapezoid& t) {
    return {Point{t.a, 1}, Point{t.b, 1}, Point{t.d, 0}, Point{t.c, 0}};
}

// Number of connected components after deleting `removed`.
inline int components_without(const trapezoid::IntersectionGraph& g, std::span<const Vertex> removed) {
    const Vertex n = g.vertex_count();
    std::vector<bool> gone(static_cast<std::size_t>(n + 1), false);
    for (Vertex v : removed) gone[static_cast<std::size_t>(v)] = true;
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    int components = 0;
    for (Vertex s = 1; s <= n; ++s) {
        if (gone[s] || seen[s]) continue;
        ++components;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : g.neighbors(u)) {
                if (!gone[v] && !seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
    }
    return components;
}

inline std::int64_t min_degree(const trapezoid::IntersectionGraph& g) {
    std::int64_t best = g.vertex_count();
    for (Vertex v = 1; v <= g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

inline trapezoid::IntersectionGraph graph_from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u - 1)].push_back(v);
        adj[static_cast<std::size_t>(v - 1)].push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return trapezoid::IntersectionGraph(std::move(adj));
}

// Random caterpillar on vertices 1..n with shuffled labels.
inline trapezoid::CaterpillarDecomposition random_caterpillar(Vertex n, std::mt19937_64& rng) {
    std::vector<Vertex> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    const auto spine_length = std::uniform_int_distribution<Vertex>(1, n)(rng);
    trapezoid::CaterpillarDecomposition cd;
    cd.spine.assign(labels.begin(), labels.begin() + spine_length);
    cd.pendants.resize(cd.spine.size());
    std::uniform_int_distribution<std::size_t> pick(0, cd.spine.size() - 1);
    for (auto it = labels.begin() + spine_length; it != labels.end(); ++it) cd.pendants[pick(rng)].push_back(*it);
    return cd;
}

inline std::vector<std::pair<Vertex, Vertex>> caterpillar_edges(const trapezoid::CaterpillarDecomposition& cd) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t k = 0; k < cd.spine.size(); ++k) {
        if (k + 1 < cd.spine.size()) edges.push_back(std::minmax(cd.spine[k], cd.spine[k + 1]));
        for (Vertex p : cd.pendants[k]) edges.push_back(std::minmax(cd.spine[k], p));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace support
