#include "trapezoid/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "trapezoid/errors.hpp"

namespace trapezoid {

namespace {

void check_line(std::span<const Trapezoid> ts, bool upper, std::vector<std::string>& report) {
    const auto n = static_cast<std::int64_t>(ts.size());
    const char* line = upper ? "upper" : "lower";
    std::vector<int> seen(static_cast<std::size_t>(2 * n + 1), 0);
    auto note = [&](Coord label, std::size_t owner, const char* corner) {
        if (label < 1 || label > 2 * n) {
            report.push_back(std::string(corner) + "[" + std::to_string(owner + 1) + "] = " + std::to_string(label) +
                             " outside 1.." + std::to_string(2 * n) + " on " + line + " line");
            return;
        }
        if (++seen[static_cast<std::size_t>(label)] == 2) {
            report.push_back("duplicate label " + std::to_string(label) + " on " + line + " line");
        }
    };
    for (std::size_t i = 0; i < ts.size(); ++i) {
        note(upper ? ts[i].a : ts[i].c, i, upper ? "a" : "c");
        note(upper ? ts[i].b : ts[i].d, i, upper ? "b" : "d");
    }
}

}  // namespace

std::vector<std::string> validate(std::span<const Trapezoid> ts) {
    std::vector<std::string> report;
    if (ts.empty()) {
        report.emplace_back("diagram has no trapezoids");
        return report;
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto id = std::to_string(i + 1);
        if (ts[i].a >= ts[i].b) {
            report.push_back("a[" + id + "] >= b[" + id + "]");
        }
        if (ts[i].c >= ts[i].d) {
            report.push_back("c[" + id + "] >= d[" + id + "]");
        }
    }
    check_line(ts, true, report);
    check_line(ts, false, report);
    return report;
}

TrapezoidDiagram::TrapezoidDiagram(std::vector<Trapezoid> trapezoids) : trapezoids_(std::move(trapezoids)) {
    if (auto report = validate(trapezoids_); !report.empty()) {
        throw ValidationError(std::move(report));
    }
}

const Trapezoid& TrapezoidDiagram::at(Vertex v) const {
    if (v < 1 || v > size()) {
        throw ContractViolation("trapezoid " + std::to_string(v) + " outside 1.." + std::to_string(size()));
    }
    return (*this)[v];
}

TrapezoidDiagram normalize(std::span<const RawTrapezoid> raw) {
    const std::size_t n = raw.size();
    std::vector<std::string> report;
    for (std::size_t i = 0; i < n; ++i) {
        const auto id = std::to_string(i + 1);
        if (!(raw[i].a < raw[i].b)) report.push_back("a[" + id + "] >= b[" + id + "]");
        if (!(raw[i].c < raw[i].d)) report.push_back("c[" + id + "] >= d[" + id + "]");
    }

    // ranks[k] for point k = 2i (left corner) or 2i + 1 (right corner)
    auto rank_line = [&](bool upper) {
        std::vector<std::pair<double, std::size_t>> points;
        points.reserve(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            points.emplace_back(upper ? raw[i].a : raw[i].c, 2 * i);
            points.emplace_back(upper ? raw[i].b : raw[i].d, 2 * i + 1);
        }
        std::sort(points.begin(), points.end());
        std::vector<Coord> ranks(2 * n);
        for (std::size_t r = 0; r < points.size(); ++r) {
            if (r > 0 && points[r].first == points[r - 1].first) {
                report.push_back(std::string("tie on ") + (upper ? "upper" : "lower") + " line between trapezoids " +
                                 std::to_string(points[r - 1].second / 2 + 1) + " and " +
                                 std::to_string(points[r].second / 2 + 1));
            }
            ranks[points[r].second] = static_cast<Coord>(r + 1);
        }
        return ranks;
    };
    const auto upper = rank_line(true);
    const auto lower = rank_line(false);
    if (!report.empty()) {
        throw ValidationError(std::move(report));
    }

    std::vector<Trapezoid> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = Trapezoid{upper[2 * i], upper[2 * i + 1], lower[2 * i], lower[2 * i + 1]};
    }
    return TrapezoidDiagram(std::move(out));
}

TrapezoidDiagram normalize(const TrapezoidDiagram& diagram) {
    std::vector<RawTrapezoid> raw;
    raw.reserve(diagram.trapezoids().size());
    for (const auto& t : diagram.trapezoids()) {
        raw.push_back({double(t.a), double(t.b), double(t.c), double(t.d)});
    }
    return normalize(raw);
}

TrapezoidDiagram random_diagram(Vertex n, std::uint64_t seed) {
    require(n >= 1, "random_diagram needs n >= 1");
    std::mt19937_64 rng(seed);
    const auto count = static_cast<std::size_t>(n);
    std::vector<Coord> labels(2 * count);
    auto matching = [&] {
        std::iota(labels.begin(), labels.end(), Coord{1});
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<std::pair<Coord, Coord>> pairs(count);
        for (std::size_t k = 0; k < count; ++k) {
            pairs[k] = std::minmax(labels[2 * k], labels[2 * k + 1]);
        }
        return pairs;
    };
    const auto upper = matching();
    const auto lower = matching();
    std::vector<Trapezoid> ts(count);
    for (std::size_t k = 0; k < count; ++k) {
        ts[k] = Trapezoid{upper[k].first, upper[k].second, lower[k].first, lower[k].second};
    }
    return TrapezoidDiagram(std::move(ts));
}

PointIndex::PointIndex(const TrapezoidDiagram& diagram)
    : up_(static_cast<std::size_t>(diagram.coord_count()), kNoVertex),
      bottom_(static_cast<std::size_t>(diagram.coord_count()), kNoVertex),
      bottom_left_(static_cast<std::size_t>(diagram.coord_count()), 0) {
    for (Vertex i = 1; i <= diagram.size(); ++i) {
        const Trapezoid& t = diagram[i];
        up_[static_cast<std::size_t>(t.a - 1)] = i;
        up_[static_cast<std::size_t>(t.b - 1)] = i;
        bottom_[static_cast<std::size_t>(t.c - 1)] = i;
        bottom_[static_cast<std::size_t>(t.d - 1)] = i;
        bottom_left_[static_cast<std::size_t>(t.c - 1)] = 1;
    }
}

bool lies_left_of(const TrapezoidDiagram& diagram, Vertex i, Vertex j) {
    const Trapezoid& ti = diagram.at(i);
    const Trapezoid& tj = diagram.at(j);
    return ti.b < tj.a && ti.d < tj.c;
}

bool is_adjacent(const TrapezoidDiagram& diagram, Vertex i, Vertex j) {
    if (i == j) {
        throw ContractViolation("is_adjacent called with i == j");
    }
    return !lies_left_of(diagram, i, j) && !lies_left_of(diagram, j, i);
}

IntersectionGraph::IntersectionGraph(std::vector<std::vector<Vertex>> adjacency) : adjacency_(std::move(adjacency)) {
    const Vertex n = vertex_count();
    std::int64_t endpoints = 0;
    for (Vertex v = 1; v <= n; ++v) {
        const auto list = neighbors(v);
        require(std::is_sorted(list.begin(), list.end()), "adjacency list not sorted");
        require(std::adjacent_find(list.begin(), list.end()) == list.end(), "parallel edge in adjacency list");
        for (Vertex u : list) {
            require(u >= 1 && u <= n && u != v, "adjacency entry out of range or self-loop");
        }
        endpoints += static_cast<std::int64_t>(list.size());
    }
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex u : neighbors(v)) {
            require(has_edge(u, v), "adjacency lists not symmetric");
        }
    }
    edge_count_ = endpoints / 2;
}

bool IntersectionGraph::has_edge(Vertex u, Vertex v) const {
    const auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

bool IntersectionGraph::is_complete() const noexcept {
    const std::int64_t n = vertex_count();
    return edge_count_ == n * (n - 1) / 2;
}

std::vector<std::pair<Vertex, Vertex>> IntersectionGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 1; u <= vertex_count(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

IntersectionGraph intersection_graph(const TrapezoidDiagram& diagram) {
    const Vertex n = diagram.size();
    std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
    for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j) {
            if (is_adjacent(diagram, i, j)) {
                adjacency[static_cast<std::size_t>(i - 1)].push_back(j);
                adjacency[static_cast<std::size_t>(j - 1)].push_back(i);
            }
        }
    }
    // j < i entries were appended in increasing i order, so lists stay sorted
    return IntersectionGraph(std::move(adjacency));
}

}  // namespace trapezoid
