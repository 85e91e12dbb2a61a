#pragma once

// Brute-force reference computations used only by the tests. They share no
// code with the library beyond the Integer type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "chromhom/graph.hpp"
#include "chromhom/integer.hpp"

namespace oracle {

using chromhom::Integer;
using Dense = std::vector<std::vector<Integer>>;

// Fraction-free Gaussian elimination (Bareiss).
inline Integer determinant(Dense a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t x = start; x < n; ++x) {
        cur.push_back(x);
        subsets(n, k, x + 1, cur, out);
        cur.pop_back();
    }
}

// Invariant factors d_k = D_k / D_{k-1}, where D_k is the gcd of all k x k minors.
inline std::vector<Integer> minor_gcd_factors(const Dense& m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                Dense sub(k, std::vector<Integer>(k));
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[r[a]][c[b]];
                g = gcd(g, determinant(sub));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Number of proper colorings of g with `colors` colors, by exhaustive search.
inline std::uint64_t proper_colorings(const chromhom::Graph& g, int colors) {
    const int n = g.vertex_count();
    std::vector<int> c(n, 0);
    std::uint64_t count = 0;
    auto ok = [&](int upto) {
        for (const auto& e : g.edges())
            if (e.u <= upto && e.w <= upto && c[e.u] == c[e.w]) return false;
        return true;
    };
    std::function<void(int)> go = [&](int v) {
        if (v == n) {
            ++count;
            return;
        }
        for (int x = 0; x < colors; ++x) {
            c[v] = x;
            if (ok(v)) go(v + 1);
        }
    };
    if (colors == 0) return n == 0 ? 1 : 0;
    go(0);
    return count;
}

}  // namespace oracle
