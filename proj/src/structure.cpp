#include "trapezoid/structure.hpp"

#include <algorithm>
#include <deque>

#include "trapezoid/errors.hpp"

namespace trapezoid {

namespace {

std::size_t slot(Vertex v) { return static_cast<std::size_t>(v - 1); }

}  // namespace

std::variant<Bipartition, OddCycle> is_bipartite(const IntersectionGraph& graph) {
    const Vertex n = graph.vertex_count();
    constexpr std::uint8_t unseen = 2;
    std::vector<std::uint8_t> color(slot(n + 1), unseen);
    std::vector<Vertex> parent(slot(n + 1), kNoVertex);
    std::vector<Vertex> depth(slot(n + 1), 0);
    std::deque<Vertex> queue;

    for (Vertex root = 1; root <= n; ++root) {
        if (color[slot(root)] != unseen) continue;
        color[slot(root)] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : graph.neighbors(u)) {
                if (color[slot(v)] == unseen) {
                    color[slot(v)] = static_cast<std::uint8_t>(1 - color[slot(u)]);
                    parent[slot(v)] = u;
                    depth[slot(v)] = depth[slot(u)] + 1;
                    queue.push_back(v);
                } else if (color[slot(v)] == color[slot(u)]) {
                    // Same color across an edge in BFS means equal depth:
                    // climb both tree paths to the common ancestor.
                    std::vector<Vertex> from_u{u};
                    std::vector<Vertex> from_v{v};
                    Vertex p = u;
                    Vertex q = v;
                    while (p != q) {
                        p = parent[slot(p)];
                        q = parent[slot(q)];
                        from_u.push_back(p);
                        from_v.push_back(q);
                    }
                    from_v.pop_back();  // ancestor appears once
                    // ancestor .. u, then v .. child of ancestor, closing back to the ancestor
                    OddCycle cycle{std::vector<Vertex>(from_u.rbegin(), from_u.rend())};
                    cycle.vertices.insert(cycle.vertices.end(), from_v.begin(), from_v.end());
                    return cycle;
                }
            }
        }
    }
    return Bipartition{std::move(color)};
}

std::optional<std::array<Vertex, 3>> has_triangle(const IntersectionGraph& graph) {
    for (Vertex u = 1; u <= graph.vertex_count(); ++u) {
        const auto nu = graph.neighbors(u);
        for (Vertex v : nu) {
            if (v <= u) continue;
            const auto nv = graph.neighbors(v);
            // smallest common neighbor w > v
            auto i = std::upper_bound(nu.begin(), nu.end(), v);
            auto j = std::upper_bound(nv.begin(), nv.end(), v);
            while (i != nu.end() && j != nv.end()) {
                if (*i < *j) {
                    ++i;
                } else if (*j < *i) {
                    ++j;
                } else {
                    return std::array<Vertex, 3>{u, v, *i};
                }
            }
        }
    }
    return std::nullopt;
}

Vertex CaterpillarDecomposition::vertex_count() const {
    std::size_t total = spine.size();
    for (const auto& p : pendants) total += p.size();
    return static_cast<Vertex>(total);
}

std::string to_string(CaterpillarRefusal refusal) {
    switch (refusal) {
        case CaterpillarRefusal::not_a_tree:
            return "not a tree";
        case CaterpillarRefusal::not_a_caterpillar:
            return "tree but not caterpillar";
    }
    return "unknown";
}

std::variant<CaterpillarDecomposition, CaterpillarRefusal> is_caterpillar(const IntersectionGraph& graph) {
    const Vertex n = graph.vertex_count();
    if (n == 0) return CaterpillarDecomposition{};
    if (n == 1) return CaterpillarDecomposition{{1}, {{}}};

    if (graph.edge_count() != n - 1) return CaterpillarRefusal::not_a_tree;
    {
        std::vector<bool> seen(slot(n + 1), false);
        std::vector<Vertex> stack{1};
        seen[0] = true;
        Vertex reached = 1;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : graph.neighbors(u)) {
                if (!seen[slot(v)]) {
                    seen[slot(v)] = true;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        if (reached != n) return CaterpillarRefusal::not_a_tree;
    }

    auto is_leaf = [&](Vertex v) { return graph.degree(v) == 1; };

    // Inner vertices (degree >= 2) must induce a path.
    std::vector<Vertex> inner;
    std::vector<int> inner_degree(slot(n + 1), 0);
    for (Vertex v = 1; v <= n; ++v) {
        if (is_leaf(v)) continue;
        inner.push_back(v);
        for (Vertex u : graph.neighbors(v)) {
            if (!is_leaf(u)) ++inner_degree[slot(v)];
        }
        if (inner_degree[slot(v)] > 2) return CaterpillarRefusal::not_a_caterpillar;
    }

    std::vector<Vertex> spine;
    if (inner.empty()) {
        spine = {1, 2};  // K2
    } else {
        // walk the inner path from its smallest endpoint
        Vertex start = inner.front();
        for (Vertex v : inner) {
            if (inner_degree[slot(v)] <= 1) {
                start = v;
                break;
            }
        }
        Vertex prev = kNoVertex;
        Vertex cur = start;
        while (cur != kNoVertex) {
            spine.push_back(cur);
            Vertex next = kNoVertex;
            for (Vertex u : graph.neighbors(cur)) {
                if (!is_leaf(u) && u != prev) next = u;
            }
            prev = cur;
            cur = next;
        }
        auto smallest_leaf = [&](Vertex v, Vertex skip) {
            for (Vertex u : graph.neighbors(v)) {
                if (is_leaf(u) && u != skip) return u;
            }
            return kNoVertex;
        };
        const Vertex head = smallest_leaf(spine.front(), kNoVertex);
        const Vertex tail = smallest_leaf(spine.back(), head);
        spine.insert(spine.begin(), head);
        spine.push_back(tail);
    }
    if (spine.back() < spine.front()) {
        std::reverse(spine.begin(), spine.end());
    }

    std::vector<bool> on_spine(slot(n + 1), false);
    for (Vertex v : spine) on_spine[slot(v)] = true;
    CaterpillarDecomposition out{spine, std::vector<std::vector<Vertex>>(spine.size())};
    for (std::size_t k = 0; k < spine.size(); ++k) {
        for (Vertex u : graph.neighbors(spine[k])) {
            if (!on_spine[slot(u)]) out.pendants[k].push_back(u);
        }
    }
    return out;
}

TrapezoidDiagram caterpillar_to_diagram(const CaterpillarDecomposition& cd) {
    require(cd.pendants.size() == cd.spine.size(), "pendant lists must parallel the spine");
    const Vertex n = cd.vertex_count();
    require(n >= 1, "caterpillar has no vertices");

    std::vector<bool> placed(slot(n + 1), false);
    auto claim = [&](Vertex v) {
        require(v >= 1 && v <= n && !placed[slot(v)], "decomposition must cover 1..n exactly once");
        placed[slot(v)] = true;
    };

    std::size_t widest = 0;
    for (const auto& p : cd.pendants) widest = std::max(widest, p.size());
    // Scratch axis in units of `unit`: spine k spans [4k, 4k+5], so only
    // neighbours overlap; pendants sit in disjoint slots inside (4k+1, 4k+4).
    const double unit = 2.0 * static_cast<double>(widest) + 2.0;

    std::vector<RawTrapezoid> raw(slot(n + 1));
    for (std::size_t k = 0; k < cd.spine.size(); ++k) {
        claim(cd.spine[k]);
        const double base = 4.0 * static_cast<double>(k) * unit;
        raw[slot(cd.spine[k])] = {base, base + 5 * unit, base, base + 5 * unit};
        for (std::size_t j = 0; j < cd.pendants[k].size(); ++j) {
            const Vertex p = cd.pendants[k][j];
            claim(p);
            const double lo = base + unit + static_cast<double>(2 * j + 1);
            raw[slot(p)] = {lo, lo + 1, lo, lo + 1};
        }
    }
    return normalize(raw);
}

}  // namespace trapezoid
