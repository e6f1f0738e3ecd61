#include "trapezoid/connectivity.hpp"

#include <cassert>

#include "trapezoid/errors.hpp"
#include "trapezoid/min_prefix_tree.hpp"

namespace trapezoid {

namespace {

bool entirely_left(const Trapezoid& t, CutLine line) { return t.b <= line.x && t.d <= line.y; }
bool entirely_right(const Trapezoid& t, CutLine line) { return t.a >= line.x + 1 && t.c >= line.y + 1; }

void check_line(const TrapezoidDiagram& diagram, CutLine line) {
    const Coord last = diagram.coord_count() - 1;
    if (line.x < 1 || line.x > last || line.y < 1 || line.y > last) {
        throw ContractViolation("cut line (" + std::to_string(line.x) + ", " + std::to_string(line.y) +
                                ") outside 1.." + std::to_string(last));
    }
}

ConnectivityResult complete_graph_result(const TrapezoidDiagram& diagram) {
    return ConnectivityResult{diagram.size() - 1, std::nullopt, std::nullopt};
}

ConnectivityResult with_witness(const TrapezoidDiagram& diagram, Count kappa, CutLine line, bool witness) {
    ConnectivityResult result{kappa, std::nullopt, line};
    if (witness) {
        result.witness = crossing_set(diagram, line);
        if (static_cast<Count>(result.witness->size()) != kappa) {
            throw CrossCheckError("witness size disagrees with kappa");
        }
    }
    return result;
}

}  // namespace

BoundaryArrays::BoundaryArrays(std::vector<Vertex> leftmost, std::vector<Vertex> rightmost)
    : leftmost_(std::move(leftmost)), rightmost_(std::move(rightmost)) {
    require(leftmost_.size() == rightmost_.size(), "boundary arrays differ in length");
}

std::vector<Vertex> compute_leftmost(const TrapezoidDiagram& diagram, const PointIndex& index) {
    const Coord labels = diagram.coord_count();
    std::vector<Vertex> leftmost(static_cast<std::size_t>(labels), kNoVertex);
    for (Coord j = 2; j <= labels; ++j) {
        const Vertex i = index.up(j);
        Vertex best = leftmost[static_cast<std::size_t>(j - 2)];
        if (diagram[i].b == j && (best == kNoVertex || diagram[best].d > diagram[i].d)) {
            best = i;
        }
        leftmost[static_cast<std::size_t>(j - 1)] = best;
    }
    return leftmost;
}

std::vector<Vertex> compute_rightmost(const TrapezoidDiagram& diagram, const PointIndex& index) {
    const Coord labels = diagram.coord_count();
    std::vector<Vertex> rightmost(static_cast<std::size_t>(labels), kNoVertex);
    // rightmost[x] looks at a >= x + 1, i.e. label x + 1 joins the candidates.
    for (Coord x = labels - 1; x >= 1; --x) {
        const Vertex i = index.up(x + 1);
        Vertex best = rightmost[static_cast<std::size_t>(x)];
        if (diagram[i].a == x + 1 && (best == kNoVertex || diagram[best].c < diagram[i].c)) {
            best = i;
        }
        rightmost[static_cast<std::size_t>(x - 1)] = best;
    }
    return rightmost;
}

BoundaryArrays compute_boundaries(const TrapezoidDiagram& diagram, const PointIndex& index) {
    return BoundaryArrays(compute_leftmost(diagram, index), compute_rightmost(diagram, index));
}

std::optional<Count> n_xy(const TrapezoidDiagram& diagram, CutLine line) {
    check_line(diagram, line);
    bool any_left = false;
    bool any_right = false;
    Count crossing = 0;
    for (const Trapezoid& t : diagram.trapezoids()) {
        if (entirely_left(t, line)) {
            any_left = true;
        } else if (entirely_right(t, line)) {
            any_right = true;
        } else {
            ++crossing;
        }
    }
    if (!any_left || !any_right) {
        return std::nullopt;
    }
    return crossing;
}

std::vector<Vertex> crossing_set(const TrapezoidDiagram& diagram, CutLine line) {
    check_line(diagram, line);
    std::vector<Vertex> out;
    for (Vertex i = 1; i <= diagram.size(); ++i) {
        if (!entirely_left(diagram[i], line) && !entirely_right(diagram[i], line)) {
            out.push_back(i);
        }
    }
    return out;
}

SweepState::SweepState(const TrapezoidDiagram& diagram, const PointIndex& index)
    : diagram_(&diagram),
      index_(&index),
      roles_(static_cast<std::size_t>(diagram.size()), Role::right),
      right_(diagram.size()) {}

SweepState SweepState::at(const TrapezoidDiagram& diagram, const PointIndex& index, Coord x) {
    require(x >= 0 && x <= diagram.coord_count(), "sweep position out of range");
    SweepState state(diagram, index);
    state.x_ = x;
    state.right_ = 0;
    for (Vertex i = 1; i <= diagram.size(); ++i) {
        Role& role = state.roles_[static_cast<std::size_t>(i - 1)];
        if (diagram[i].b <= x) {
            role = Role::left;
            ++state.left_;
        } else if (diagram[i].a > x) {
            role = Role::right;
            ++state.right_;
        } else {
            role = Role::cut;
        }
    }
    return state;
}

Vertex SweepState::advance() {
    require(x_ < diagram_->coord_count(), "sweep already past the last label");
    ++x_;
    const Vertex i = index_->up(x_);
    Role& role = roles_[static_cast<std::size_t>(i - 1)];
    if ((*diagram_)[i].a == x_) {
        role = Role::cut;
        --right_;
    } else {
        role = Role::left;
        ++left_;
    }
    return i;
}

std::optional<LineMinimum> min_nxy_for_x(const TrapezoidDiagram& diagram, const PointIndex& index,
                                         const BoundaryArrays& bounds, const SweepState& state) {
    const Coord x = state.x();
    if (x < 1 || x >= diagram.coord_count()) {
        return std::nullopt;
    }
    const Vertex lm = bounds.leftmost(x);
    const Vertex rm = bounds.rightmost(x);
    if (lm == kNoVertex || rm == kNoVertex) {
        return std::nullopt;
    }
    // Separating y: some left trapezoid has d <= y and some right one has c >= y + 1.
    const Coord lo = diagram[lm].d;
    const Coord hi = diagram[rm].c - 1;
    if (lo > hi) {
        return std::nullopt;
    }
    // running = #(right, c <= y) - #(left, d <= y); N(x, y) = (n - right) + running.
    Count running = 0;
    LineMinimum best{0, 0};
    const Vertex* owner = index.bottom().data();
    for (Coord y = 1; y <= hi; ++y) {
        const Role role = state.role(owner[y - 1]);
        const bool left_corner = index.bottom_is_left(y);
        running += static_cast<Count>(left_corner && role == Role::right) -
                   static_cast<Count>(!left_corner && role == Role::left);
        if (y >= lo && (best.y == 0 || running < best.value)) {
            best = LineMinimum{running, y};
        }
    }
    best.value += diagram.size() - state.right();
    return best;
}

ConnectivityResult kappa_quadratic(const TrapezoidDiagram& diagram, const ConnectivityOptions& options) {
    return kappa_quadratic(diagram, PointIndex(diagram), options);
}

ConnectivityResult kappa_quadratic(const TrapezoidDiagram& diagram, const PointIndex& index,
                                   const ConnectivityOptions& options) {
    const BoundaryArrays bounds = compute_boundaries(diagram, index);
    SweepState state(diagram, index);

    std::optional<Count> best;
    CutLine best_line;
    for (Coord x = 1; x < diagram.coord_count(); ++x) {
        state.advance();
        if (auto m = min_nxy_for_x(diagram, index, bounds, state); m && (!best || m->value < *best)) {
            best = m->value;
            best_line = CutLine{x, m->y};
        }
    }
    if (!best) {
        return complete_graph_result(diagram);
    }
    return with_witness(diagram, *best, best_line, options.witness);
}

ConnectivityResult kappa_fast(const TrapezoidDiagram& diagram, const ConnectivityOptions& options) {
    return kappa_fast(diagram, PointIndex(diagram), options);
}

ConnectivityResult kappa_fast(const TrapezoidDiagram& diagram, const PointIndex& index,
                              const ConnectivityOptions& options) {
    const Count n = diagram.size();
    const BoundaryArrays bounds = compute_boundaries(diagram, index);

    // A is indexed by lower-line labels. A right trapezoid contributes +1 at c,
    // a left one -1 at d, a cut one nothing. The leftmost left trapezoid's d
    // carries -n^2 - 1 instead, pushing every prefix that ends before it above n.
    const Count big = n * n;
    MinPrefixTree tree(static_cast<std::size_t>(diagram.coord_count()));
    auto put = [&tree](Coord label, Count value) { tree.update(static_cast<std::size_t>(label), value); };
    for (const Trapezoid& t : diagram.trapezoids()) {
        put(t.c, 1);
        put(t.d, 0);
    }

    Count right = n;
    std::optional<Count> best;
    Coord best_x = 0;
    for (Coord x = 1; x < diagram.coord_count(); ++x) {
        const Vertex i = index.up(x);
        const Trapezoid& t = diagram[i];
        if (t.a == x) {
            --right;
            put(t.c, 0);
            put(t.d, 0);
        } else {
            put(t.c, 0);
            put(t.d, -1);
        }

        if (x > 1 && bounds.leftmost(x - 1) != kNoVertex) {
            put(diagram[bounds.leftmost(x - 1)].d, -1);
        }
        const Vertex lm = bounds.leftmost(x);
        const Vertex rm = bounds.rightmost(x);
        if (lm != kNoVertex) {
            put(diagram[lm].d, -big - 1);
        }
        if (lm == kNoVertex || rm == kNoVertex) {
            continue;
        }

        const Count candidate = tree.min_prefix(static_cast<std::size_t>(diagram[rm].c)) + big + (n - right);
        const bool accepted = candidate <= n;
        // A separating y exists iff d[lm] < c[rm]; otherwise the sentinel is
        // out of reach and every prefix stays above n.
        assert(accepted == (diagram[lm].d < diagram[rm].c));
        if (options.trace != nullptr) {
            options.trace->push_back(SweepCandidate{x, candidate, accepted});
        }
        if (accepted && (!best || candidate < *best)) {
            best = candidate;
            best_x = x;
        }
    }

    if (!best) {
        return complete_graph_result(diagram);
    }
    if (!options.witness) {
        return ConnectivityResult{*best, std::nullopt, std::nullopt};
    }
    const SweepState state = SweepState::at(diagram, index, best_x);
    const auto line = min_nxy_for_x(diagram, index, bounds, state);
    if (!line || line->value != *best) {
        throw CrossCheckError("sweep minimum at x = " + std::to_string(best_x) + " not reproduced by the lower-line scan");
    }
    return with_witness(diagram, *best, CutLine{best_x, line->y}, true);
}

}  // namespace trapezoid
