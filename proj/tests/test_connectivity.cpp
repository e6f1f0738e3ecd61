#include <random>

#include "doctest.h"
#include "support.hpp"
#include "trapezoid/connectivity.hpp"
#include "trapezoid/errors.hpp"
#include "trapezoid/io.hpp"
#include "trapezoid/oracle.hpp"

using namespace trapezoid;

namespace {

TrapezoidDiagram p3() { return TrapezoidDiagram({{1, 3, 1, 3}, {2, 5, 2, 5}, {4, 6, 4, 6}}); }
TrapezoidDiagram k3() { return TrapezoidDiagram({{1, 4, 1, 4}, {2, 5, 2, 5}, {3, 6, 3, 6}}); }
TrapezoidDiagram disjoint_pair() { return TrapezoidDiagram({{1, 2, 1, 2}, {3, 4, 3, 4}}); }
TrapezoidDiagram figure1() { return io::read_diagram_file(support::fixture("figure1.txt")); }

// argmin / argmax straight from the definitions
std::vector<Vertex> leftmost_by_definition(const TrapezoidDiagram& d) {
    std::vector<Vertex> out;
    for (Coord x = 1; x <= d.coord_count(); ++x) {
        Vertex best = kNoVertex;
        for (Vertex i = 1; i <= d.size(); ++i) {
            if (d[i].b <= x && (best == kNoVertex || d[i].d < d[best].d)) best = i;
        }
        out.push_back(best);
    }
    return out;
}

std::vector<Vertex> rightmost_by_definition(const TrapezoidDiagram& d) {
    std::vector<Vertex> out;
    for (Coord x = 1; x <= d.coord_count(); ++x) {
        Vertex best = kNoVertex;
        for (Vertex i = 1; i <= d.size(); ++i) {
            if (d[i].a >= x + 1 && (best == kNoVertex || d[i].c > d[best].c)) best = i;
        }
        out.push_back(best);
    }
    return out;
}

std::optional<Count> min_over_y(const TrapezoidDiagram& d, Coord x) {
    std::optional<Count> best;
    for (Coord y = 1; y < d.coord_count(); ++y) {
        if (auto v = n_xy(d, CutLine{x, y}); v && (!best || *v < *best)) best = v;
    }
    return best;
}

}  // namespace

TEST_CASE("boundary arrays on the eight-trapezoid example") {
    const auto d = figure1();
    const PointIndex pi(d);
    CHECK(compute_leftmost(d, pi) == std::vector<Vertex>{-1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(compute_rightmost(d, pi) == std::vector<Vertex>{7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, -1, -1, -1});
}

TEST_CASE("boundary arrays on one trapezoid") {
    const TrapezoidDiagram one({{1, 2, 1, 2}});
    const PointIndex pi(one);
    CHECK(compute_leftmost(one, pi) == std::vector<Vertex>{-1, 1});
    CHECK(compute_rightmost(one, pi) == std::vector<Vertex>{-1, -1});
}

TEST_CASE("boundary arrays match their definitions") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto d = random_diagram(1 + static_cast<Vertex>(seed % 25), seed);
        const PointIndex pi(d);
        const auto lm = compute_leftmost(d, pi);
        const auto rm = compute_rightmost(d, pi);
        REQUIRE(lm == leftmost_by_definition(d));
        REQUIRE(rm == rightmost_by_definition(d));
        for (std::size_t x = 1; x < lm.size(); ++x) {
            if (lm[x - 1] != kNoVertex) {
                REQUIRE(lm[x] != kNoVertex);
                REQUIRE(d[lm[x]].d <= d[lm[x - 1]].d);
            }
            if (rm[x - 1] == kNoVertex) REQUIRE(rm[x] == kNoVertex);
            if (rm[x] != kNoVertex) REQUIRE(d[rm[x]].c <= d[rm[x - 1]].c);
        }
    }
}

TEST_CASE("n_xy") {
    CHECK(n_xy(disjoint_pair(), CutLine{2, 2}) == Count{0});
    CHECK(n_xy(p3(), CutLine{3, 3}) == Count{1});
    CHECK(crossing_set(p3(), CutLine{3, 3}) == std::vector<Vertex>{2});

    const auto triple = k3();
    for (Coord x = 1; x <= 5; ++x) {
        for (Coord y = 1; y <= 5; ++y) CHECK_FALSE(n_xy(triple, CutLine{x, y}).has_value());
    }
    CHECK_THROWS_AS((void)n_xy(triple, CutLine{0, 1}), ContractViolation);
    CHECK_THROWS_AS((void)n_xy(triple, CutLine{1, 6}), ContractViolation);
}

TEST_CASE("per-x minimum at x = 11 of the eight-trapezoid example") {
    const auto d = figure1();
    const PointIndex pi(d);
    const auto bounds = compute_boundaries(d, pi);
    SweepState state(d, pi);
    while (state.x() < 11) state.advance();
    CHECK(state.left() == 5);
    CHECK(state.right() == 2);
    CHECK(state.role(6) == Role::cut);
    for (Vertex i = 1; i <= 8; ++i) {
        if (i != 6) CHECK(state.role(i) != Role::cut);
    }

    // running sums left + prefix(y), y = 1..16
    const std::vector<Count> expected_sum{5, 5, 4, 3, 3, 3, 3, 2, 2, 1, 1, 2, 1, 2, 2, 2};
    Count running = state.left();
    for (Coord y = 1; y <= 16; ++y) {
        const Vertex i = pi.bottom(y);
        if (state.role(i) == Role::left && d[i].d == y) --running;
        if (state.role(i) == Role::right && d[i].c == y) ++running;
        CHECK(running == expected_sum[static_cast<std::size_t>(y - 1)]);
    }

    const auto m = min_nxy_for_x(d, pi, bounds, state);
    REQUIRE(m.has_value());
    CHECK(m->value == 2);
    CHECK(m->y == 10);
    CHECK(SweepState::at(d, pi, 11).left() == 5);
}

TEST_CASE("per-x minimum is absent without a left trapezoid") {
    const auto d = figure1();
    const PointIndex pi(d);
    const auto bounds = compute_boundaries(d, pi);
    CHECK_FALSE(min_nxy_for_x(d, pi, bounds, SweepState::at(d, pi, 2)).has_value());
    CHECK_FALSE(min_nxy_for_x(d, pi, bounds, SweepState::at(d, pi, 15)).has_value());
}

TEST_CASE("per-x minimum matches n_xy over y") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const auto d = random_diagram(1 + static_cast<Vertex>(seed % 20), seed);
        const PointIndex pi(d);
        const auto bounds = compute_boundaries(d, pi);
        SweepState incremental(d, pi);
        for (Coord x = 1; x < d.coord_count(); ++x) {
            incremental.advance();
            const auto direct = SweepState::at(d, pi, x);
            REQUIRE(direct.left() == incremental.left());
            REQUIRE(direct.right() == incremental.right());
            const auto m = min_nxy_for_x(d, pi, bounds, incremental);
            const auto expected = min_over_y(d, x);
            REQUIRE(m.has_value() == expected.has_value());
            if (m) {
                REQUIRE(m->value == *expected);
                REQUIRE(n_xy(d, CutLine{x, m->y}) == expected);
            }
        }
    }
}

TEST_CASE("small fixed cases") {
    CHECK(kappa_quadratic(k3()).kappa == 2);
    CHECK(kappa_fast(k3()).kappa == 2);
    CHECK_FALSE(kappa_fast(k3(), {.witness = true}).witness.has_value());

    CHECK(kappa_quadratic(disjoint_pair()).kappa == 0);
    CHECK(kappa_fast(disjoint_pair()).kappa == 0);
    CHECK(kappa_fast(disjoint_pair(), {.witness = true}).witness == std::vector<Vertex>{});

    const TrapezoidDiagram one({{1, 2, 1, 2}});
    CHECK(kappa_fast(one).kappa == 0);
    CHECK(kappa_quadratic(one).kappa == 0);

    const auto path = kappa_fast(p3(), {.witness = true});
    CHECK(path.kappa == 1);
    CHECK(path.witness == std::vector<Vertex>{2});
    CHECK(kappa_quadratic(p3()).kappa == 1);
}

TEST_CASE("eight-trapezoid example has connectivity 2") {
    const auto d = figure1();
    const auto fast = kappa_fast(d, {.witness = true});
    CHECK(fast.kappa == 2);
    CHECK(kappa_quadratic(d).kappa == 2);
    REQUIRE(fast.witness.has_value());
    CHECK(support::components_without(intersection_graph(d), *fast.witness) >= 2);
}

TEST_CASE("sweep candidates: accepted exactly when a separating y exists") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto d = random_diagram(2 + static_cast<Vertex>(seed % 30), seed);
        std::vector<SweepCandidate> trace;
        (void)kappa_fast(d, {.trace = &trace});
        const PointIndex pi(d);
        const auto bounds = compute_boundaries(d, pi);
        for (const auto& c : trace) {
            const auto m = min_nxy_for_x(d, pi, bounds, SweepState::at(d, pi, c.x));
            REQUIRE(c.accepted == m.has_value());
            if (c.accepted) {
                REQUIRE(c.candidate == m->value);
            } else {
                REQUIRE(c.candidate > d.size());
            }
        }
    }
}

TEST_CASE("fast, quadratic and graph oracle agree; witness is a cut; kappa <= min degree") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 1500; ++k) {
        const auto n = std::uniform_int_distribution<Vertex>(1, 14)(rng);
        const auto d = random_diagram(n, rng());
        const auto g = intersection_graph(d);
        const auto fast = kappa_fast(d, {.witness = true});
        const auto quad = kappa_quadratic(d, {.witness = true});
        const Count oracle = oracle::kappa_bruteforce(g);
        REQUIRE(fast.kappa == oracle);
        REQUIRE(quad.kappa == oracle);
        REQUIRE(oracle::kappa_cutline_bruteforce(d) == oracle);
        REQUIRE(fast.kappa <= support::min_degree(g));
        REQUIRE((fast.kappa == n - 1 && !fast.witness) == g.is_complete());
        for (const auto& r : {fast, quad}) {
            if (r.witness) {
                REQUIRE(static_cast<Count>(r.witness->size()) == r.kappa);
                REQUIRE(support::components_without(g, *r.witness) >= 2);
                REQUIRE(n_xy(d, *r.achieved_cut) == r.kappa);
            }
        }
    }
}
