#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chromhom/graph.hpp"
#include "chromhom/theorems.hpp"

using namespace chromhom;

TEST_CASE("components of the triangle") {
    const auto p3 = gen::cycle(3);
    CHECK(components(p3, 0).component_count == 3);
    const auto one = components(p3, 0b001);
    CHECK(one.component_count == 2);
    CHECK(one.component_id == std::vector<int>{0, 0, 1});
    CHECK(components(p3, p3.full_mask()).component_count == 1);
}

TEST_CASE("component ids follow the minimal vertex") {
    const Graph g(4, {{2, 3}, {0, 3}});
    const auto part = components(g, 0b01);
    CHECK(part.component_id == std::vector<int>{0, 1, 2, 2});
    const auto both = components(g, 0b11);
    CHECK(both.component_id == std::vector<int>{0, 1, 0, 0});
}

TEST_CASE("delete_edge") {
    const auto p3 = gen::cycle(3);
    for (std::size_t e = 0; e < 3; ++e) {
        const auto d = delete_edge(p3, e);
        CHECK(d.vertex_count() == 3);
        CHECK(d.edge_count() == 2);
        CHECK(is_forest(d));
    }
    const Graph looped(2, {{0, 1}, {1, 1}});
    const auto d = delete_edge(looped, 1);
    CHECK(d == Graph(2, {{0, 1}}));
    CHECK(delete_edge(gen::complete(4), 2).edge_count() == 5);
    CHECK_THROWS_AS(delete_edge(p3, 3), std::out_of_range);
}

TEST_CASE("contract_edge") {
    const auto p2 = contract_edge(gen::cycle(3), 0);
    CHECK(p2 == Graph(2, {{0, 1}, {1, 0}}));
    const auto p1 = contract_edge(gen::cycle(2), 0);
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 1);
    CHECK(p1.has_loop());
    CHECK(contract_edge(gen::path(3), 0) == gen::path(2));
    CHECK_THROWS_AS(contract_edge(p1, 0), std::invalid_argument);
}

TEST_CASE("simplify") {
    CHECK(simplify(gen::cycle(2)) == gen::path(2));
    const auto k4 = gen::complete(4);
    CHECK(simplify(k4) == k4);
    const auto bowtie = gen::wedge(gen::cycle(3), gen::cycle(3));
    CHECK(simplify(bowtie) == bowtie);
    const Graph loops(2, {{0, 0}, {0, 0}, {0, 1}});
    CHECK(simplify(loops) == Graph(2, {{0, 0}, {0, 1}}));
}

TEST_CASE("shortest_cycle_parity") {
    const auto p5 = shortest_cycle_parity(gen::cycle(5));
    CHECK(p5.girth == 5);
    CHECK(p5.has_odd_cycle);
    CHECK_FALSE(p5.has_even_cycle);
    const auto k4 = shortest_cycle_parity(gen::complete(4));
    CHECK(k4.girth == 3);
    CHECK(k4.has_odd_cycle);
    CHECK(k4.has_even_cycle);
    const auto tree = shortest_cycle_parity(gen::path(5));
    CHECK_FALSE(tree.girth.has_value());
    CHECK_FALSE(tree.has_odd_cycle);
    CHECK_FALSE(tree.has_even_cycle);
    CHECK(shortest_cycle_parity(gen::cycle(1)).has_loop);
    // A double edge is not a cycle of length >= 3.
    CHECK_FALSE(shortest_cycle_parity(gen::cycle(2)).girth.has_value());
    // Two triangles sharing an edge contain a 4-cycle.
    CHECK(shortest_cycle_parity(gen::polygon_with_diagonals(4, {{0, 2}})).has_even_cycle);
    CHECK_FALSE(shortest_cycle_parity(gen::wedge(gen::cycle(3), gen::cycle(3))).has_even_cycle);
}

TEST_CASE("generators") {
    CHECK(gen::cycle(3) == Graph(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(gen::complete(4).edge_count() == 6);
    const auto w = gen::wedge(gen::cycle(3), gen::cycle(3));
    CHECK(w.vertex_count() == 5);
    CHECK(w.edge_count() == 6);
    CHECK_THROWS_AS(gen::cycle(0), std::invalid_argument);
    CHECK(gen::polygon_with_diagonals(4, {{0, 2}}).edge_count() == 5);
}

TEST_CASE("graph validation") {
    CHECK_THROWS(Graph(2, {{0, 2}}));
    std::vector<Edge> many(64, Edge{0, 1});
    CHECK_THROWS_AS(Graph(2, many), std::length_error);
}

TEST_CASE("pendant, forest and non-tree part") {
    const auto tail = gen::wedge(gen::cycle(3), gen::path(2));
    CHECK(is_pendant(tail, 3));
    CHECK_FALSE(is_pendant(tail, 0));
    const Graph mixed(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    const auto nt = non_tree_part(mixed);
    CHECK(nt.vertices == 3);
    CHECK(nt.components == 1);
    CHECK(isolated_vertex_count(mixed) == 2);
}

TEST_CASE("edit operations: random invariants") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_multigraph(rng, 6, 8);
        if (g.edge_count() == 0) continue;
        // Adding one edge merges at most one pair of components.
        for (EdgeMask s = 0; s <= g.full_mask(); s += 3) {
            for (std::size_t e = 0; e < g.edge_count(); ++e) {
                const int before = components(g, s).component_count;
                const auto part = components(g, s);
                const int after = components(g, s | (EdgeMask{1} << e)).component_count;
                const bool same = part.component_id[g.edge(e).u] == part.component_id[g.edge(e).w];
                CHECK(after == (same ? before : before - 1));
            }
        }
        CHECK(simplify(simplify(g)) == simplify(g));
        CHECK(components(simplify(g), simplify(g).full_mask()).component_id ==
              components(g, g.full_mask()).component_id);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).is_loop()) continue;
            const auto c = contract_edge(g, e);
            CHECK(c.vertex_count() == g.vertex_count() - 1);
            CHECK(c.edge_count() == g.edge_count() - 1);
        }
        // Deleting and contracting distinct edges commute up to the index shift.
        if (g.edge_count() >= 2 && !g.edge(0).is_loop()) {
            const std::size_t d = g.edge_count() - 1;
            CHECK(delete_edge(contract_edge(g, 0), d - 1) == contract_edge(delete_edge(g, d), 0));
        }
    }
}

TEST_CASE("connected simple graphs up to isomorphism") {
    const std::vector<std::size_t> counts = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) CHECK(connected_simple_graphs(n).size() == counts[n - 1]);
}
