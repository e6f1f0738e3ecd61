#pragma once

// Brute-force references. Slow on purpose; each is independent of the
// sweep algorithms it is used to check.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "trapezoid/connectivity.hpp"
#include "trapezoid/diagram.hpp"
#include "trapezoid/min_prefix_tree.hpp"

namespace trapezoid::oracle {

/**
 * Split-vertex network: vertex v becomes v_in -> v_out with capacity 1 and
 * every undirected edge {u, v} becomes u_out -> v_in and v_out -> u_in with
 * unbounded capacity. Max flow from s_out to t_in counts internally
 * vertex-disjoint s-t paths.
 */
class FlowNetwork {
public:
    explicit FlowNetwork(const IntersectionGraph& graph);

    // Stops early once `limit` units are routed.
    std::int64_t vertex_disjoint_paths(Vertex s, Vertex t, std::int64_t limit) const;

private:
    struct Arc {
        std::int32_t to;
        std::int32_t rev;
        std::int64_t capacity;
    };

    void add_arc(std::int32_t from, std::int32_t to, std::int64_t capacity);

    std::vector<std::vector<Arc>> arcs_;
};

// Min over non-adjacent pairs of vertex-disjoint paths; n - 1 if complete.
Count kappa_maxflow(const IntersectionGraph& graph);

// Smallest vertex set whose removal leaves a disconnected graph of >= 2
// vertices, by enumerating all subsets. n <= 20.
Count kappa_subsets(const IntersectionGraph& graph);

// Max-flow answer; for n <= 12 also checks it against subset enumeration
// and throws CrossCheckError on disagreement.
Count kappa_bruteforce(const IntersectionGraph& graph);

// Min of n_xy over every cut line; n - 1 if no line separates. O(n^3).
Count kappa_cutline_bruteforce(const TrapezoidDiagram& diagram);

// Plain array with linear-scan queries.
class NaivePrefixArray {
public:
    using Value = MinPrefixTree::Value;

    explicit NaivePrefixArray(std::size_t capacity) : values_(capacity, 0) {}

    void update(std::size_t index, Value value) { values_.at(index - 1) = value; }
    Value prefix_sum(std::size_t index) const;
    Value min_prefix(std::size_t index) const;

private:
    std::vector<Value> values_;
};

struct PrefixOp {
    enum class Kind { update, prefix_sum, min_prefix };
    Kind kind;
    std::size_t index;
    MinPrefixTree::Value value = 0;  // update only
};

// Applies ops in order and collects every query answer.
template <typename Model>
std::vector<MinPrefixTree::Value> replay(Model& model, std::span<const PrefixOp> ops) {
    std::vector<MinPrefixTree::Value> out;
    for (const PrefixOp& op : ops) {
        switch (op.kind) {
            case PrefixOp::Kind::update:
                model.update(op.index, op.value);
                break;
            case PrefixOp::Kind::prefix_sum:
                out.push_back(model.prefix_sum(op.index));
                break;
            case PrefixOp::Kind::min_prefix:
                out.push_back(model.min_prefix(op.index));
                break;
        }
    }
    return out;
}

std::vector<MinPrefixTree::Value> naive_min_prefix_model(std::size_t capacity, std::span<const PrefixOp> ops);

// Visits every simple cycle (length >= 3) once, starting at its smallest
// vertex. Return false from the visitor to stop.
void enumerate_cycles(const IntersectionGraph& graph, const std::function<bool(std::span<const Vertex>)>& visit);

// A cycle with no chord and at least `min_length` vertices, if any.
std::optional<std::vector<Vertex>> find_chordless_cycle(const IntersectionGraph& graph, std::size_t min_length);

}  // namespace trapezoid::oracle
