#include <random>

#include "doctest.h"
#include "support.hpp"
#include "trapezoid/errors.hpp"
#include "trapezoid/oracle.hpp"
#include "trapezoid/structure.hpp"

using namespace trapezoid;

namespace {

IntersectionGraph path_graph(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return support::graph_from_edges(n, edges);
}

IntersectionGraph spider() {
    // center 1, legs 1-2-3, 1-4-5, 1-6-7
    const std::vector<std::pair<Vertex, Vertex>> edges{{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}};
    return support::graph_from_edges(7, edges);
}

void check_odd_cycle(const IntersectionGraph& g, const OddCycle& c) {
    const auto& v = c.vertices;
    REQUIRE(v.size() % 2 == 1);
    REQUIRE(v.size() >= 3);
    std::vector<Vertex> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (std::size_t k = 0; k < v.size(); ++k) REQUIRE(g.has_edge(v[k], v[(k + 1) % v.size()]));
}

// 2-colorability by trying every coloring.
bool bipartite_by_enumeration(const IntersectionGraph& g) {
    const Vertex n = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            if (((mask >> (u - 1)) & 1u) == ((mask >> (v - 1)) & 1u)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("bipartite and triangle on fixed graphs") {
    const auto p3 = intersection_graph(TrapezoidDiagram({{1, 3, 1, 3}, {2, 5, 2, 5}, {4, 6, 4, 6}}));
    const auto parts = is_bipartite(p3);
    REQUIRE(std::holds_alternative<Bipartition>(parts));
    const auto& side = std::get<Bipartition>(parts).side;
    CHECK(side[0] == side[2]);
    CHECK(side[0] != side[1]);
    CHECK_FALSE(has_triangle(p3).has_value());

    const auto k3 = intersection_graph(TrapezoidDiagram({{1, 4, 1, 4}, {2, 5, 2, 5}, {3, 6, 3, 6}}));
    const auto odd = is_bipartite(k3);
    REQUIRE(std::holds_alternative<OddCycle>(odd));
    CHECK(std::get<OddCycle>(odd).vertices.size() == 3);
    CHECK(has_triangle(k3) == std::array<Vertex, 3>{1, 2, 3});

    // C5 is not a trapezoid graph, but the checkers take any graph
    const std::vector<std::pair<Vertex, Vertex>> c5{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
    const auto pentagon = support::graph_from_edges(5, c5);
    const auto verdict = is_bipartite(pentagon);
    REQUIRE(std::holds_alternative<OddCycle>(verdict));
    check_odd_cycle(pentagon, std::get<OddCycle>(verdict));
    CHECK_FALSE(has_triangle(pentagon).has_value());
}

TEST_CASE("bipartite verdict matches exhaustive coloring and odd-cycle search") {
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        const auto d = random_diagram(1 + static_cast<Vertex>(seed % 8), seed);
        const auto g = intersection_graph(d);
        bool odd_cycle_found = false;
        oracle::enumerate_cycles(g, [&](std::span<const Vertex> c) {
            odd_cycle_found = c.size() % 2 == 1;
            return !odd_cycle_found;
        });
        const auto verdict = is_bipartite(g);
        REQUIRE(std::holds_alternative<Bipartition>(verdict) == !odd_cycle_found);
        REQUIRE(std::holds_alternative<Bipartition>(verdict) == bipartite_by_enumeration(g));
        if (const auto* c = std::get_if<OddCycle>(&verdict)) check_odd_cycle(g, *c);
        if (const auto* b = std::get_if<Bipartition>(&verdict)) {
            for (auto [u, v] : g.edges()) REQUIRE(b->side[u - 1] != b->side[v - 1]);
        }
    }
}

TEST_CASE("triangle search agrees with all-triples scan") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 300; ++k) {
        const auto n = std::uniform_int_distribution<Vertex>(1, 60)(rng);
        // sparse-ish diagrams: mostly short trapezoids give triangle-free graphs too
        const auto g = intersection_graph(random_diagram(n, rng()));
        std::optional<std::array<Vertex, 3>> expected;
        for (Vertex a = 1; a <= n && !expected; ++a)
            for (Vertex b = a + 1; b <= n && !expected; ++b)
                for (Vertex c = b + 1; c <= n && !expected; ++c)
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) expected = std::array{a, b, c};
        REQUIRE(has_triangle(g) == expected);
    }
    CHECK_FALSE(has_triangle(spider()).has_value());
}

TEST_CASE("caterpillar recognition") {
    const std::vector<std::pair<Vertex, Vertex>> star_edges{{1, 2}, {1, 3}, {1, 4}};
    const auto star = is_caterpillar(support::graph_from_edges(4, star_edges));
    REQUIRE(std::holds_alternative<CaterpillarDecomposition>(star));
    const auto& s = std::get<CaterpillarDecomposition>(star);
    CHECK(s.spine == std::vector<Vertex>{2, 1, 3});
    CHECK(s.pendants[1] == std::vector<Vertex>{4});

    const auto path = is_caterpillar(path_graph(6));
    REQUIRE(std::holds_alternative<CaterpillarDecomposition>(path));
    CHECK(std::get<CaterpillarDecomposition>(path).spine == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
    for (const auto& p : std::get<CaterpillarDecomposition>(path).pendants) CHECK(p.empty());

    const auto sp = is_caterpillar(spider());
    REQUIRE(std::holds_alternative<CaterpillarRefusal>(sp));
    CHECK(std::get<CaterpillarRefusal>(sp) == CaterpillarRefusal::not_a_caterpillar);
    CHECK(to_string(CaterpillarRefusal::not_a_caterpillar) == "tree but not caterpillar");

    const std::vector<std::pair<Vertex, Vertex>> triangle{{1, 2}, {2, 3}, {1, 3}};
    CHECK(std::get<CaterpillarRefusal>(is_caterpillar(support::graph_from_edges(3, triangle))) ==
          CaterpillarRefusal::not_a_tree);
    const std::vector<std::pair<Vertex, Vertex>> forest{{1, 2}, {3, 4}, {4, 5}};
    CHECK(std::get<CaterpillarRefusal>(is_caterpillar(support::graph_from_edges(6, forest))) ==
          CaterpillarRefusal::not_a_tree);

    CHECK(std::get<CaterpillarDecomposition>(is_caterpillar(IntersectionGraph{})).spine.empty());
    CHECK(std::get<CaterpillarDecomposition>(is_caterpillar(path_graph(1))).spine == std::vector<Vertex>{1});
    CHECK(std::get<CaterpillarDecomposition>(is_caterpillar(path_graph(2))).spine == std::vector<Vertex>{1, 2});
}

TEST_CASE("caterpillar to diagram") {
    const CaterpillarDecomposition p3{{1, 2, 3}, {{}, {}, {}}};
    const auto g = intersection_graph(caterpillar_to_diagram(p3));
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}});

    const CaterpillarDecomposition single{{1}, {{}}};
    CHECK(caterpillar_to_diagram(single) == TrapezoidDiagram({{1, 2, 1, 2}}));

    const auto d = caterpillar_to_diagram(CaterpillarDecomposition{{3, 1}, {{2, 4}, {5}}});
    for (const auto& t : d.trapezoids()) {
        CHECK(t.a == t.c);
        CHECK(t.b == t.d);
    }

    CHECK_THROWS_AS(caterpillar_to_diagram(CaterpillarDecomposition{{1, 1}, {{}, {}}}), ContractViolation);
    CHECK_THROWS_AS(caterpillar_to_diagram(CaterpillarDecomposition{{1, 3}, {{}, {}}}), ContractViolation);
    CHECK_THROWS_AS(caterpillar_to_diagram(CaterpillarDecomposition{{1}, {}}), ContractViolation);
}

TEST_CASE("random caterpillars round-trip") {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 300; ++k) {
        const auto n = std::uniform_int_distribution<Vertex>(1, 120)(rng);
        const auto cd = support::random_caterpillar(n, rng);
        const auto d = caterpillar_to_diagram(cd);
        const auto g = intersection_graph(d);
        REQUIRE(g.edges() == support::caterpillar_edges(cd));
        const auto back = is_caterpillar(g);
        REQUIRE(std::holds_alternative<CaterpillarDecomposition>(back));
        REQUIRE(support::caterpillar_edges(std::get<CaterpillarDecomposition>(back)) == g.edges());
    }
}

TEST_CASE("every tree drawn as a diagram is a caterpillar") {
    int trees = 0;
    for (std::uint64_t seed = 0; seed < 20000; ++seed) {
        const auto g = intersection_graph(random_diagram(2 + static_cast<Vertex>(seed % 7), seed));
        if (g.edge_count() != g.vertex_count() - 1 || support::components_without(g, {}) != 1) continue;
        ++trees;
        REQUIRE(std::holds_alternative<CaterpillarDecomposition>(is_caterpillar(g)));
    }
    CHECK(trees > 100);
}

TEST_CASE("no chordless cycle of length five or more") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto g = intersection_graph(random_diagram(5 + static_cast<Vertex>(seed % 5), seed));
        REQUIRE_FALSE(oracle::find_chordless_cycle(g, 5).has_value());
    }
    const std::vector<std::pair<Vertex, Vertex>> c5{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
    CHECK(oracle::find_chordless_cycle(support::graph_from_edges(5, c5), 5).has_value());
}
