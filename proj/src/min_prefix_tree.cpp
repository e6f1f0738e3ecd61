#include "trapezoid/min_prefix_tree.hpp"

#include <algorithm>

#include "trapezoid/errors.hpp"

namespace trapezoid {

MinPrefixTree::MinPrefixTree(std::size_t capacity) : capacity_(capacity), depth_(0) {
    require(capacity >= 1, "MinPrefixTree capacity must be at least 1");
    while ((std::size_t{1} << depth_) < capacity) {
        ++depth_;
    }
    first_leaf_ = std::size_t{1} << depth_;
    nodes_.assign(2 * first_leaf_, Node{});
}

void MinPrefixTree::check_index(std::size_t index) const {
    if (index < 1 || index > capacity_) {
        throw ContractViolation("MinPrefixTree index " + std::to_string(index) + " outside 1.." +
                                std::to_string(capacity_));
    }
}

std::size_t MinPrefixTree::leaf_position(std::size_t index) const {
    check_index(index);
    return index + first_leaf_ - 1;
}

void MinPrefixTree::update(std::size_t index, Value value) {
    std::size_t i = leaf_position(index);
    nodes_[i] = Node{value, value};
    while (i > 1) {
        i &= ~std::size_t{1};  // left sibling
        const Node& l = nodes_[i];
        const Node& r = nodes_[i + 1];
        nodes_[i >> 1] = Node{l.sum + r.sum, std::min(l.min_sum, l.sum + r.min_sum)};
        i >>= 1;
    }
}

MinPrefixTree::Value MinPrefixTree::prefix_sum(std::size_t index) const {
    check_index(index);
    Value total = 0;
    std::size_t node = 1;
    std::size_t remaining = index;
    for (std::size_t span = first_leaf_ >> 1; span > 0 && remaining > 0; span >>= 1) {
        if (remaining >= span) {
            total += nodes_[2 * node].sum;
            node = 2 * node + 1;
            remaining -= span;
        } else {
            node = 2 * node;
        }
    }
    if (remaining > 0) {
        total += nodes_[node].sum;  // depth 0: the root is the only leaf
    }
    return total;
}

MinPrefixTree::Value MinPrefixTree::min_prefix(std::size_t index) const {
    check_index(index);
    // Top-down: each time the target lies in the right child, the whole left
    // child is covered, so fold its min_sum (offset by what came before) and sum.
    bool found = false;
    Value best = 0;
    Value partial = 0;
    std::size_t node = 1;
    std::size_t remaining = index;
    auto fold = [&](const Node& covered) {
        const Value candidate = partial + covered.min_sum;
        if (!found || candidate < best) {
            best = candidate;
            found = true;
        }
        partial += covered.sum;
    };
    for (std::size_t span = first_leaf_ >> 1; span > 0 && remaining > 0; span >>= 1) {
        if (remaining >= span) {
            fold(nodes_[2 * node]);
            node = 2 * node + 1;
            remaining -= span;
        } else {
            node = 2 * node;
        }
    }
    // index == 2^depth ends on the last leaf itself
    if (remaining > 0) {
        fold(nodes_[node]);
    }
    return best;
}

MinPrefixTree::Value MinPrefixTree::value(std::size_t index) const {
    return nodes_[leaf_position(index)].sum;
}

MinPrefixTree::Value MinPrefixTree::node_sum(std::size_t position) const {
    require(position >= 1 && position < nodes_.size(), "node position out of range");
    return nodes_[position].sum;
}

MinPrefixTree::Value MinPrefixTree::node_min_sum(std::size_t position) const {
    require(position >= 1 && position < nodes_.size(), "node position out of range");
    return nodes_[position].min_sum;
}

bool MinPrefixTree::satisfies_recurrences() const {
    for (std::size_t leaf = first_leaf_; leaf < nodes_.size(); ++leaf) {
        if (nodes_[leaf].sum != nodes_[leaf].min_sum) {
            return false;
        }
    }
    for (std::size_t x = 1; x < first_leaf_; ++x) {
        const Node& l = nodes_[2 * x];
        const Node& r = nodes_[2 * x + 1];
        if (nodes_[x].sum != l.sum + r.sum || nodes_[x].min_sum != std::min(l.min_sum, l.sum + r.min_sum)) {
            return false;
        }
    }
    return true;
}

}  // namespace trapezoid
