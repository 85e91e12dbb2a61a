#include "chromhom/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace chromhom {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a < b) std::swap(a, b);
        parent[a] = b;  // root is always the minimal vertex
        return true;
    }
};

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
    if (edges_.size() > kMaxEdges)
        throw std::length_error("graph has " + std::to_string(edges_.size()) +
                                " edges; at most " + std::to_string(kMaxEdges) + " are supported");
    for (const auto& e : edges_) {
        if (e.u < 0 || e.w < 0 || e.u >= vertex_count_ || e.w >= vertex_count_)
            throw std::out_of_range("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                    std::to_string(e.w));
    }
}

EdgeMask Graph::full_mask() const {
    return edges_.empty() ? 0 : (~EdgeMask{0} >> (64 - edges_.size()));
}

bool Graph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.u == v) + (e.w == v);
    return d;
}

std::string Graph::fingerprint() const {
    std::string out = std::to_string(vertex_count_) + "|";
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(edges_[k].u) + "-" + std::to_string(edges_[k].w);
    }
    return out;
}

ComponentPartition components(const Graph& g, EdgeMask subset) {
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (subset >> e & 1) uf.unite(g.edge(e).u, g.edge(e).w);

    ComponentPartition p;
    p.component_id.assign(static_cast<std::size_t>(n), -1);
    // Roots are minimal vertices, so scanning vertices in order numbers the
    // components by their minimal vertex.
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (p.component_id[r] < 0) p.component_id[r] = p.component_count++;
        p.component_id[v] = p.component_id[r];
    }
    return p;
}

Graph delete_edge(const Graph& g, std::size_t e) {
    if (e >= g.edge_count()) throw std::out_of_range("edge index out of range");
    auto edges = g.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
    return Graph(g.vertex_count(), std::move(edges));
}

Graph contract_edge(const Graph& g, std::size_t e) {
    if (e >= g.edge_count()) throw std::out_of_range("edge index out of range");
    const Edge c = g.edge(e);
    if (c.is_loop()) throw std::invalid_argument("cannot contract a loop");
    const int keep = std::min(c.u, c.w);
    const int gone = std::max(c.u, c.w);
    auto relabel = [&](int v) {
        if (v == gone) v = keep;
        return v > gone ? v - 1 : v;
    };
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        if (k == e) continue;
        edges.push_back({relabel(g.edge(k).u), relabel(g.edge(k).w)});
    }
    return Graph(g.vertex_count() - 1, std::move(edges));
}

Graph simplify(const Graph& g) {
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        auto key = std::minmax(e.u, e.w);
        if (seen.insert(key).second) edges.push_back(e);
    }
    return Graph(g.vertex_count(), std::move(edges));
}

Graph move_edge_last(const Graph& g, std::size_t e) {
    if (e >= g.edge_count()) throw std::out_of_range("edge index out of range");
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < g.edge_count(); ++k)
        if (k != e) order.push_back(k);
    order.push_back(e);
    return permute_edges(g, order);
}

Graph permute_edges(const Graph& g, const std::vector<std::size_t>& order) {
    if (order.size() != g.edge_count()) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> used(order.size(), false);
    std::vector<Edge> edges;
    edges.reserve(order.size());
    for (auto k : order) {
        if (k >= order.size() || used[k]) throw std::invalid_argument("not a permutation");
        used[k] = true;
        edges.push_back(g.edge(k));
    }
    return Graph(g.vertex_count(), std::move(edges));
}

namespace {

// Simple adjacency of the simplified loop-free graph.
std::vector<std::vector<int>> simple_adjacency(const Graph& g) {
    std::vector<std::set<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        adj[e.u].insert(e.w);
        adj[e.w].insert(e.u);
    }
    std::vector<std::vector<int>> out;
    out.reserve(adj.size());
    for (auto& s : adj) out.emplace_back(s.begin(), s.end());
    return out;
}

std::optional<int> girth(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::optional<int> best;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (parent[x] != y) {
                    int len = dist[x] + dist[y] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

bool bipartite(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x]) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    q.push(y);
                } else if (side[y] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// A block that is a cycle has as many edges as vertices; a 2-connected block
// with more edges contains a theta subgraph and hence an even cycle.
bool has_even_cycle(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> stack;
    int timer = 0;
    bool found = false;

    std::function<void(int, int)> dfs = [&](int x, int parent) {
        disc[x] = low[x] = timer++;
        for (int y : adj[x]) {
            if (found) return;
            if (y == parent) continue;
            if (disc[y] < 0) {
                stack.emplace_back(x, y);
                dfs(y, x);
                low[x] = std::min(low[x], low[y]);
                if (low[y] >= disc[x]) {
                    std::set<int> verts;
                    int edges = 0;
                    while (!stack.empty()) {
                        auto [a, b] = stack.back();
                        stack.pop_back();
                        verts.insert(a);
                        verts.insert(b);
                        ++edges;
                        if (a == x && b == y) break;
                    }
                    const int nv = static_cast<int>(verts.size());
                    if (edges > 1 && (edges > nv || nv % 2 == 0)) found = true;
                }
            } else if (disc[y] < disc[x]) {
                stack.emplace_back(x, y);
                low[x] = std::min(low[x], disc[y]);
            }
        }
    };
    for (int s = 0; s < n && !found; ++s)
        if (disc[s] < 0) dfs(s, -1);
    return found;
}

}  // namespace

CycleInfo shortest_cycle_parity(const Graph& g) {
    CycleInfo info;
    info.has_loop = g.has_loop();
    const auto adj = simple_adjacency(g);
    info.girth = girth(adj);
    if (info.girth) {
        info.has_odd_cycle = !bipartite(adj);
        info.has_even_cycle = has_even_cycle(adj);
    }
    return info;
}

bool is_pendant(const Graph& g, std::size_t e) {
    const Edge& x = g.edge(e);
    if (x.is_loop()) return false;
    return g.degree(x.u) == 1 || g.degree(x.w) == 1;
}

bool is_forest(const Graph& g) {
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges())
        if (!uf.unite(e.u, e.w)) return false;
    return true;
}

int isolated_vertex_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) count += g.degree(v) == 0;
    return count;
}

NonTreePart non_tree_part(const Graph& g) {
    const auto part = components(g, g.full_mask());
    std::vector<int> verts(part.component_count, 0), edges(part.component_count, 0);
    for (int v = 0; v < g.vertex_count(); ++v) ++verts[part.component_id[v]];
    for (const auto& e : g.edges()) ++edges[part.component_id[e.u]];
    NonTreePart out;
    for (int c = 0; c < part.component_count; ++c) {
        if (edges[c] >= verts[c]) {
            out.vertices += verts[c];
            ++out.components;
        }
    }
    return out;
}

namespace gen {

Graph empty(int n) { return Graph(n); }

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<Edge> edges;
    for (int k = 0; k + 1 < n; ++k) edges.push_back({k, k + 1});
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 1) throw std::invalid_argument("cycle needs at least one vertex");
    std::vector<Edge> edges;
    for (int k = 0; k < n; ++k) edges.push_back({k, (k + 1) % n});
    return Graph(n, std::move(edges));
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

Graph polygon_with_diagonals(int v, const std::vector<std::pair<int, int>>& diagonals) {
    Graph base = cycle(v);
    auto edges = base.edges();
    for (auto [a, b] : diagonals) edges.push_back({a, b});
    return Graph(v, std::move(edges));
}

Graph wedge(const Graph& g1, const Graph& g2, int a, int b) {
    if (a < 0 || a >= g1.vertex_count() || b < 0 || b >= g2.vertex_count())
        throw std::out_of_range("wedge vertex out of range");
    const int n1 = g1.vertex_count();
    auto map2 = [&](int x) {
        if (x == b) return a;
        return n1 + (x < b ? x : x - 1);
    };
    auto edges = g1.edges();
    for (const auto& e : g2.edges()) edges.push_back({map2(e.u), map2(e.w)});
    return Graph(n1 + g2.vertex_count() - 1, std::move(edges));
}

}  // namespace gen

}  // namespace chromhom
