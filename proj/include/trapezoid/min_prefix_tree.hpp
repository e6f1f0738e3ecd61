#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trapezoid {

/**
 * Complete binary tree over an array A[1..n] answering, in O(log n):
 *   - update(i, v):    A[i] = v (assignment, not addition)
 *   - prefix_sum(i):   A[1] + ... + A[i]
 *   - min_prefix(i):   min over k <= i of A[1] + ... + A[k]
 *
 * Nodes live in one array with the root at 1 and children at 2x, 2x+1.
 * Logical index i sits at leaf position i + 2^depth - 1. Each node keeps
 * the sum of its subtree and the minimum running sum that starts at the
 * subtree's leftmost leaf:
 *
 *   sum[x]     = sum[2x] + sum[2x+1]
 *   min_sum[x] = min(min_sum[2x], sum[2x] + min_sum[2x+1])
 *
 * Leaves past n hold 0 and are never covered by a query.
 */
class MinPrefixTree {
public:
    using Value = std::int64_t;

    explicit MinPrefixTree(std::size_t capacity);

    std::size_t capacity() const noexcept { return capacity_; }
    int depth() const noexcept { return depth_; }

    void update(std::size_t index, Value value);
    Value prefix_sum(std::size_t index) const;
    Value min_prefix(std::size_t index) const;

    // Current A[index].
    Value value(std::size_t index) const;

    // Raw node access for audits. Positions are 1 .. node_count().
    std::size_t node_count() const noexcept { return nodes_.size() - 1; }
    std::size_t leaf_position(std::size_t index) const;
    Value node_sum(std::size_t position) const;
    Value node_min_sum(std::size_t position) const;

    // Checks both recurrences at every internal node.
    bool satisfies_recurrences() const;

private:
    struct Node {
        Value sum = 0;
        Value min_sum = 0;
    };

    void check_index(std::size_t index) const;

    std::size_t capacity_;
    int depth_;
    std::size_t first_leaf_;
    std::vector<Node> nodes_;  // nodes_[0] unused
};

}  // namespace trapezoid
