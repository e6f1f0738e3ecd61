#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trapezoid/diagram.hpp"

namespace trapezoid {

using Count = std::int64_t;

// Vertical line through upper gap (x, x+1) and lower gap (y, y+1).
struct CutLine {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const CutLine&, const CutLine&) = default;
};

// leftmost[x]: among trapezoids with b <= x, the one with minimal d.
// rightmost[x]: among trapezoids with a >= x + 1, the one with maximal c.
// kNoVertex where the set is empty. Indexed by x = 1..2n.
class BoundaryArrays {
public:
    BoundaryArrays(std::vector<Vertex> leftmost, std::vector<Vertex> rightmost);

    Vertex leftmost(Coord x) const { return leftmost_[static_cast<std::size_t>(x - 1)]; }
    Vertex rightmost(Coord x) const { return rightmost_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<Vertex>& leftmost() const noexcept { return leftmost_; }
    const std::vector<Vertex>& rightmost() const noexcept { return rightmost_; }

private:
    std::vector<Vertex> leftmost_;
    std::vector<Vertex> rightmost_;
};

std::vector<Vertex> compute_leftmost(const TrapezoidDiagram& diagram, const PointIndex& index);
std::vector<Vertex> compute_rightmost(const TrapezoidDiagram& diagram, const PointIndex& index);
BoundaryArrays compute_boundaries(const TrapezoidDiagram& diagram, const PointIndex& index);

// Number of trapezoids meeting the line, or nullopt ("infinite") when the
// line has no trapezoid entirely on its left or none entirely on its right.
std::optional<Count> n_xy(const TrapezoidDiagram& diagram, CutLine line);

// Trapezoids meeting the line, ascending.
std::vector<Vertex> crossing_set(const TrapezoidDiagram& diagram, CutLine line);

struct ConnectivityResult {
    Count kappa = 0;
    // Vertex cut of size kappa; absent for complete graphs or when not requested.
    std::optional<std::vector<Vertex>> witness;
    std::optional<CutLine> achieved_cut;
};

// Relative to the gap (x, x+1) on the upper line.
enum class Role : std::uint8_t {
    right,  // a > x
    cut,    // a <= x < b
    left,   // b <= x
};

/**
 * Left-to-right sweep over upper-line gaps. A fresh state sits before the
 * first label (x = 0, every trapezoid is right); advance() moves to x + 1.
 */
class SweepState {
public:
    SweepState(const TrapezoidDiagram& diagram, const PointIndex& index);

    // Classifies directly at x in O(n).
    static SweepState at(const TrapezoidDiagram& diagram, const PointIndex& index, Coord x);

    // Moves to the next gap; returns the trapezoid whose role changed.
    Vertex advance();

    Coord x() const noexcept { return x_; }
    Count left() const noexcept { return left_; }
    Count right() const noexcept { return right_; }
    Count cut() const noexcept { return static_cast<Count>(roles_.size()) - left_ - right_; }
    Role role(Vertex v) const { return roles_[static_cast<std::size_t>(v - 1)]; }

private:
    const TrapezoidDiagram* diagram_;
    const PointIndex* index_;
    std::vector<Role> roles_;
    Coord x_ = 0;
    Count left_ = 0;
    Count right_ = 0;
};

struct LineMinimum {
    Count value = 0;  // N(x, y)
    Coord y = 0;      // smallest minimizing y
};

// Minimum N(x, y) over separating lines at the state's x, by one O(n) scan
// of the lower line. nullopt when no line at this x separates.
std::optional<LineMinimum> min_nxy_for_x(const TrapezoidDiagram& diagram, const PointIndex& index,
                                         const BoundaryArrays& bounds, const SweepState& state);

// One per x where both boundaries exist (fast path instrumentation).
struct SweepCandidate {
    Coord x = 0;
    Count candidate = 0;  // min_prefix + n^2 + (n - right)
    bool accepted = false;
};

struct ConnectivityOptions {
    bool witness = false;
    std::vector<SweepCandidate>* trace = nullptr;
};

// O(n^2): per-x lower-line scan.
ConnectivityResult kappa_quadratic(const TrapezoidDiagram& diagram, const ConnectivityOptions& options = {});
ConnectivityResult kappa_quadratic(const TrapezoidDiagram& diagram, const PointIndex& index,
                                   const ConnectivityOptions& options = {});

// O(n log n): one sweep with a MinPrefixTree over lower-line labels.
ConnectivityResult kappa_fast(const TrapezoidDiagram& diagram, const ConnectivityOptions& options = {});
ConnectivityResult kappa_fast(const TrapezoidDiagram& diagram, const PointIndex& index,
                              const ConnectivityOptions& options = {});

}  // namespace trapezoid
