#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chromhom {

using EdgeMask = std::uint64_t;

/// Hard cap on the number of edges: edge subsets are stored as 64-bit masks.
inline constexpr std::size_t kMaxEdges = 63;

struct Edge {
    int u = 0;
    int w = 0;
    bool is_loop() const { return u == w; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multigraph with an ordered edge list. Loops and parallel edges are
/// allowed. The edge order fixes the signs of the differential.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count, std::vector<Edge> edges = {});

    int vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_.at(e); }

    EdgeMask full_mask() const;
    bool has_loop() const;
    int degree(int v) const;  // loops count twice

    /// Stable textual identity used in reports: "N|u-w,u-w,...".
    std::string fingerprint() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// Connected components of the spanning subgraph [G:s], numbered by ascending
/// minimal vertex.
struct ComponentPartition {
    std::vector<int> component_id;
    int component_count = 0;
};

ComponentPartition components(const Graph& g, EdgeMask subset);

Graph delete_edge(const Graph& g, std::size_t e);
Graph contract_edge(const Graph& g, std::size_t e);
/// Collapses every parallel class to its first occurrence. Loops are kept
/// (one per vertex).
Graph simplify(const Graph& g);

/// Moves edge `e` to the end of the ordering, keeping the others in order.
Graph move_edge_last(const Graph& g, std::size_t e);
Graph permute_edges(const Graph& g, const std::vector<std::size_t>& order);

struct CycleInfo {
    bool has_loop = false;
    std::optional<int> girth;  // of the simplified graph, cycles of length >= 3
    bool has_odd_cycle = false;
    bool has_even_cycle = false;  // length >= 4 in the simplified graph
};

CycleInfo shortest_cycle_parity(const Graph& g);

/// True iff `e` joins a vertex of degree one to another vertex.
bool is_pendant(const Graph& g, std::size_t e);
bool is_forest(const Graph& g);
int isolated_vertex_count(const Graph& g);

/// Vertices and component count of the union of the non-tree components
/// (a component with a loop or parallel edge counts as non-tree).
struct NonTreePart {
    int vertices = 0;
    int components = 0;
};
NonTreePart non_tree_part(const Graph& g);

namespace gen {
Graph empty(int n);
Graph path(int n);      // n vertices, n-1 edges
Graph cycle(int n);     // polygon P_n; n = 1 is a loop, n = 2 a double edge
Graph complete(int n);
Graph polygon_with_diagonals(int v, const std::vector<std::pair<int, int>>& diagonals);
/// Disjoint union of g1 and g2 with vertex a of g1 identified with vertex b of g2.
Graph wedge(const Graph& g1, const Graph& g2, int a = 0, int b = 0);
}  // namespace gen

}  // namespace chromhom
