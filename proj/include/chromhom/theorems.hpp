#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromhom/algebra.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/homology.hpp"

namespace chromhom {

/// Outcome of one structural check. A failing report always carries a
/// witness; soft reports are informational and never fail a suite.
struct CheckReport {
    std::string name;
    std::string graph;
    std::string algebra;
    bool passed = true;
    bool soft = false;
    std::string witness;
    std::vector<std::string> notes;

    void fail(const std::string& why);
    nlohmann::json to_json() const;
    std::string to_string() const;
};

// Checks over a precomputed homology of (g, a).
CheckReport check_vanishing(const Graph& g, const BigradedHomology& h);
CheckReport check_thickness(const Graph& g, const Algebra& a, const BigradedHomology& h);
CheckReport check_h0_torsion_free(const Graph& g, const BigradedHomology& h);
CheckReport check_euler(const Graph& g, const Algebra& a, const BigradedHomology& h);
/// Over A_2 only.
CheckReport check_torsion_dichotomy(const Graph& g, const BigradedHomology& h);

CheckReport check_vanishing(const Graph& g, const Algebra& a);
CheckReport check_thickness(const Graph& g, const Algebra& a);
CheckReport check_torsion_dichotomy(const Graph& g);

/// H(G) against H(G/e) tensored with the positive-degree part of A.
CheckReport check_pendant(const Graph& g, std::size_t e, const Algebra& a);
/// Graded tensor product of H with the span of the positive-degree basis
/// elements of A.
BigradedHomology tensor_with_augmentation(const BigradedHomology& h, const Algebra& a);

/// Chain-level deletion-contraction sequence 0 -> C(G/e)[-1] -> C(G) -> C(G-e) -> 0.
CheckReport check_del_contract_exactness(const Graph& g, std::size_t e, const Algebra& a);

/// Closed form of H(P_n) over Z[x]/(x^2).
BigradedHomology polygon_closed_form_a2(int n);
CheckReport check_polygon_formula(int n);
/// H^{i+1}(P_{n+1}) = H^i(P_n) for i >= 1.
CheckReport check_polygon_recursion(int n, const Algebra& a);

CheckReport check_p3_Am(int m);

/// Closed forms for H^1 of the triangle over Z[x]/(p) for the families
/// x^m, x^2 - b x - a and x^m - 1; nullopt for other p.
std::optional<AbelianGroup> deformed_p3_closed_form(const std::vector<std::int64_t>& p);
/// `root_multiplicities`, when given, lists the multiplicities of the roots
/// of p over C.
CheckReport check_deformed_p3(const std::vector<std::int64_t>& p,
                              const std::optional<std::vector<int>>& root_multiplicities = std::nullopt);

CheckReport check_vgon_diagonals(const Graph& g, const Algebra& a);

/// Published values (hard) followed by conjecture evaluations (soft).
std::vector<CheckReport> check_conjecture_fixtures();
CheckReport check_polygon_h1_conjecture(int m, int v);
CheckReport check_cycle_torsion_conjecture(const Graph& g, int m);
CheckReport check_roots_of_unity_conjecture(int m, int v);

/// Connected simple graphs on n vertices, one per isomorphism class.
std::vector<Graph> connected_simple_graphs(int n);
bool contains_triangle(const Graph& g);
bool contains_square(const Graph& g);
/// Simple graph with the given number of vertices and a random edge count up
/// to `max_edges`, edges in random order.
Graph random_simple_graph(std::mt19937_64& rng, int vertices, int max_edges);
/// Multigraph on 1..max_vertices vertices with up to `max_edges` edges;
/// loops and parallel edges occur.
Graph random_multigraph(std::mt19937_64& rng, int max_vertices, int max_edges);

struct SuiteOptions {
    int threads = 1;
    std::uint64_t seed = 20061;
    int random_graphs = 10;
};

/// The full fixture suite: polygons, K_4, K_4 - e, the wedge of two
/// triangles and random simple graphs, over Z[x]/(x^2) and Z[x]/(x^3).
std::vector<CheckReport> run_paper_suite(const SuiteOptions& options = {});

/// Names accepted by run_named_check.
std::vector<std::string> check_names();
CheckReport run_named_check(const std::string& name, const Graph& g, const Algebra& a,
                            std::optional<std::size_t> edge = std::nullopt);

}  // namespace chromhom
