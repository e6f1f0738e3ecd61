#include "trapezoid/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

#include "trapezoid/errors.hpp"

namespace trapezoid::oracle {

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int32_t>::max();

std::int32_t in_node(Vertex v) { return 2 * (v - 1); }
std::int32_t out_node(Vertex v) { return 2 * (v - 1) + 1; }

}  // namespace

FlowNetwork::FlowNetwork(const IntersectionGraph& graph) : arcs_(static_cast<std::size_t>(2 * graph.vertex_count())) {
    for (Vertex v = 1; v <= graph.vertex_count(); ++v) {
        add_arc(in_node(v), out_node(v), 1);
        for (Vertex u : graph.neighbors(v)) {
            add_arc(out_node(v), in_node(u), kUnbounded);
        }
    }
}

void FlowNetwork::add_arc(std::int32_t from, std::int32_t to, std::int64_t capacity) {
    auto& f = arcs_[static_cast<std::size_t>(from)];
    auto& t = arcs_[static_cast<std::size_t>(to)];
    f.push_back(Arc{to, static_cast<std::int32_t>(t.size()), capacity});
    t.push_back(Arc{from, static_cast<std::int32_t>(f.size() - 1), 0});
}

std::int64_t FlowNetwork::vertex_disjoint_paths(Vertex s, Vertex t, std::int64_t limit) const {
    // Edmonds-Karp on a private residual copy.
    auto residual = arcs_;
    const std::int32_t source = out_node(s);
    const std::int32_t sink = in_node(t);
    std::int64_t flow = 0;
    std::vector<std::pair<std::int32_t, std::int32_t>> via(residual.size());
    while (flow < limit) {
        std::fill(via.begin(), via.end(), std::pair{-1, -1});
        via[static_cast<std::size_t>(source)] = {source, -1};
        std::deque<std::int32_t> queue{source};
        while (!queue.empty() && via[static_cast<std::size_t>(sink)].first < 0) {
            const std::int32_t u = queue.front();
            queue.pop_front();
            const auto& out = residual[static_cast<std::size_t>(u)];
            for (std::int32_t k = 0; k < static_cast<std::int32_t>(out.size()); ++k) {
                const Arc& arc = out[static_cast<std::size_t>(k)];
                if (arc.capacity > 0 && via[static_cast<std::size_t>(arc.to)].first < 0) {
                    via[static_cast<std::size_t>(arc.to)] = {u, k};
                    queue.push_back(arc.to);
                }
            }
        }
        if (via[static_cast<std::size_t>(sink)].first < 0) break;
        // Every s-t path crosses a unit split arc, so each augmentation is 1.
        for (std::int32_t v = sink; v != source;) {
            const auto [u, k] = via[static_cast<std::size_t>(v)];
            Arc& arc = residual[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
            arc.capacity -= 1;
            residual[static_cast<std::size_t>(v)][static_cast<std::size_t>(arc.rev)].capacity += 1;
            v = u;
        }
        ++flow;
    }
    return flow;
}

Count kappa_maxflow(const IntersectionGraph& graph) {
    const Vertex n = graph.vertex_count();
    require(n >= 1, "kappa of an empty graph");
    if (graph.is_complete()) return n - 1;
    const FlowNetwork network(graph);
    // Some vertex among the first best+1 survives a minimum cut, and every
    // lower-numbered vertex is in the cut, so its partner lies above it.
    Count best = n - 1;
    for (Vertex s = 1; s <= n && s <= best + 1; ++s) {
        for (Vertex t = s + 1; t <= n; ++t) {
            if (graph.has_edge(s, t)) continue;
            best = std::min(best, network.vertex_disjoint_paths(s, t, best));
        }
    }
    return best;
}

Count kappa_subsets(const IntersectionGraph& graph) {
    const Vertex n = graph.vertex_count();
    require(n >= 1 && n <= 20, "subset enumeration needs 1 <= n <= 20");
    std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex u : graph.neighbors(v)) adjacency[static_cast<std::size_t>(v - 1)] |= 1u << (u - 1);
    }
    const std::uint32_t all = (1u << n) - 1;
    int best = n - 1;
    for (std::uint32_t removed = 0; removed <= all; ++removed) {
        const int size = std::popcount(removed);
        const std::uint32_t rest = all & ~removed;
        if (size >= best || std::popcount(rest) < 2) continue;
        std::uint32_t reached = rest & (~rest + 1);
        for (std::uint32_t frontier = reached; frontier != 0;) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
                next |= adjacency[static_cast<std::size_t>(std::countr_zero(f))];
            }
            next &= rest & ~reached;
            reached |= next;
            frontier = next;
        }
        if (reached != rest) best = size;
    }
    return best;
}

Count kappa_bruteforce(const IntersectionGraph& graph) {
    const Count flow = kappa_maxflow(graph);
    if (graph.vertex_count() <= 12) {
        const Count subsets = kappa_subsets(graph);
        if (subsets != flow) {
            throw CrossCheckError("max-flow kappa " + std::to_string(flow) + " != subset kappa " +
                                  std::to_string(subsets));
        }
    }
    return flow;
}

Count kappa_cutline_bruteforce(const TrapezoidDiagram& diagram) {
    std::optional<Count> best;
    for (Coord x = 1; x < diagram.coord_count(); ++x) {
        for (Coord y = 1; y < diagram.coord_count(); ++y) {
            if (auto n = n_xy(diagram, CutLine{x, y}); n && (!best || *n < *best)) best = n;
        }
    }
    return best.value_or(diagram.size() - 1);
}

NaivePrefixArray::Value NaivePrefixArray::prefix_sum(std::size_t index) const {
    require(index >= 1 && index <= values_.size(), "naive prefix index out of range");
    Value total = 0;
    for (std::size_t k = 0; k < index; ++k) total += values_[k];
    return total;
}

NaivePrefixArray::Value NaivePrefixArray::min_prefix(std::size_t index) const {
    require(index >= 1 && index <= values_.size(), "naive prefix index out of range");
    Value total = 0;
    Value best = std::numeric_limits<Value>::max();
    for (std::size_t k = 0; k < index; ++k) {
        total += values_[k];
        best = std::min(best, total);
    }
    return best;
}

std::vector<MinPrefixTree::Value> naive_min_prefix_model(std::size_t capacity, std::span<const PrefixOp> ops) {
    NaivePrefixArray model(capacity);
    return replay(model, ops);
}

void enumerate_cycles(const IntersectionGraph& graph, const std::function<bool(std::span<const Vertex>)>& visit) {
    const Vertex n = graph.vertex_count();
    std::vector<bool> on_path(static_cast<std::size_t>(n + 1), false);
    std::vector<Vertex> path;
    bool stop = false;

    // Paths start at their smallest vertex; each cycle is reported in the
    // direction whose second vertex is smaller than its last.
    std::function<void(Vertex, Vertex)> extend = [&](Vertex start, Vertex u) {
        for (Vertex v : graph.neighbors(u)) {
            if (stop) return;
            if (v == start && path.size() >= 3 && path[1] < path.back()) {
                stop = !visit(path);
            } else if (v > start && !on_path[static_cast<std::size_t>(v)]) {
                on_path[static_cast<std::size_t>(v)] = true;
                path.push_back(v);
                extend(start, v);
                path.pop_back();
                on_path[static_cast<std::size_t>(v)] = false;
            }
        }
    };
    for (Vertex s = 1; s <= n && !stop; ++s) {
        path = {s};
        on_path[static_cast<std::size_t>(s)] = true;
        extend(s, s);
        on_path[static_cast<std::size_t>(s)] = false;
    }
}

std::optional<std::vector<Vertex>> find_chordless_cycle(const IntersectionGraph& graph, std::size_t min_length) {
    std::optional<std::vector<Vertex>> found;
    enumerate_cycles(graph, [&](std::span<const Vertex> cycle) {
        const std::size_t k = cycle.size();
        if (k < min_length) return true;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 2; j < k; ++j) {
                if (i == 0 && j == k - 1) continue;  // closing edge
                if (graph.has_edge(cycle[i], cycle[j])) return true;
            }
        }
        found = std::vector<Vertex>(cycle.begin(), cycle.end());
        return false;
    });
    return found;
}

}  // namespace trapezoid::oracle
