#include "chromhom/theorems.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chromhom/chromatic.hpp"
#include "chromhom/complex.hpp"
#include "chromhom/parallel.hpp"
#include "chromhom/snf.hpp"

namespace chromhom {

void CheckReport::fail(const std::string& why) {
    passed = false;
    witness = witness.empty() ? why : witness + "; " + why;
}

nlohmann::json CheckReport::to_json() const {
    return {{"check", name},   {"graph", graph},   {"algebra", algebra}, {"passed", passed},
            {"soft", soft},    {"witness", witness}, {"notes", notes}};
}

std::string CheckReport::to_string() const {
    std::string out = passed ? "PASS" : (soft ? "DISAGREE" : "FAIL");
    out += "  " + name + "  " + graph + "  " + algebra;
    if (!witness.empty()) out += "  -- " + witness;
    for (const auto& n : notes) out += "\n    " + n;
    return out;
}

namespace {

CheckReport start(std::string name, const Graph& g, const std::string& algebra) {
    CheckReport r;
    r.name = std::move(name);
    r.graph = g.fingerprint();
    r.algebra = algebra;
    return r;
}

std::string cell(int i, int j) { return "H^{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

std::string cell(int i, int j, const AbelianGroup& g) { return cell(i, j) + " = " + g.to_string(); }

// Cells where two homologies differ, as "H^{i,j} = a vs b".
std::vector<std::string> differences(const BigradedHomology& x, const BigradedHomology& y) {
    std::set<Bidegree> keys;
    for (const auto& [ij, g] : x.groups) keys.insert(ij);
    for (const auto& [ij, g] : y.groups) keys.insert(ij);
    std::vector<std::string> out;
    for (const auto& [i, j] : keys) {
        const auto a = x.at(i, j), b = y.at(i, j);
        if (!(a == b)) out.push_back(cell(i, j) + " = " + a.to_string() + " vs " + b.to_string());
    }
    return out;
}

void fail_all(CheckReport& r, const std::vector<std::string>& why) {
    for (const auto& w : why) r.fail(w);
}

bool pointed(const Algebra& a) {
    if (!a.graded()) return false;
    return std::count(a.degrees().begin(), a.degrees().end(), 0) == 1;
}

// q + q^2 + ... + q^{m-1}
Poly positive_part(int m) {
    Poly p;
    for (int k = 1; k < m; ++k) p.add_term(k, 1);
    return p;
}

Poly from_coefficients(const std::vector<std::int64_t>& c) {
    Poly p;
    for (std::size_t k = 0; k < c.size(); ++k) p.add_term(static_cast<int>(k), from_int64(c[k]));
    return p;
}

StateBasis basis_or_empty(const Graph& g, const Algebra& a, int i, int j) {
    if (i < 0 || i > static_cast<int>(g.edge_count())) return StateBasis(i, j);
    return enumerate_basis(g, a, i, j);
}

}  // namespace

CheckReport check_vanishing(const Graph& g, const BigradedHomology& h) {
    auto r = start("vanishing", g, h.algebra);
    const auto nt = non_tree_part(g);
    const int bound = nt.vertices - 2 * nt.components;
    for (const auto& [ij, grp] : h.groups) {
        const int i = ij.first;
        if (i < 0 || i > bound) r.fail(cell(i, ij.second, grp) + " outside 0 <= i <= " + std::to_string(bound));
        if (grp.has_torsion() && (i < 1 || i > bound))
            r.fail("torsion at " + cell(i, ij.second, grp) + " outside 1 <= i <= " + std::to_string(bound));
    }
    return r;
}

CheckReport check_thickness(const Graph& g, const Algebra& a, const BigradedHomology& h) {
    auto r = start("thickness", g, h.algebra);
    if (!a.graded()) {
        r.notes.push_back("ungraded algebra: nothing to check");
        return r;
    }
    const int v = g.vertex_count();
    const int mu = components(g, g.full_mask()).component_count;
    const int m = a.max_degree() + 1;
    const bool is_pointed = pointed(a);
    const bool no_isolated = isolated_vertex_count(g) == 0;
    if (!is_pointed) r.notes.push_back("algebra is not pointed: the i + j lower bound is skipped");
    if (!no_isolated) r.notes.push_back("isolated vertices: the height bound is skipped");

    for (const auto& [ij, grp] : h.groups) {
        const auto [i, j] = ij;
        const bool tor = grp.has_torsion();
        if ((m - 1) * i + j > (m - 1) * v) r.fail(cell(i, j, grp) + " violates (m-1)i + j <= (m-1)v");
        if (is_pointed) {
            if (i + j < v - mu) r.fail(cell(i, j, grp) + " violates i + j >= v - mu");
            if (tor && i + j < v - mu + 1) r.fail("torsion at " + cell(i, j, grp) + " violates i + j >= v + 1 - mu");
        }
        if (no_isolated) {
            if (i < 0 || i > v - 2 * mu) r.fail(cell(i, j, grp) + " violates 0 <= i <= v - 2mu");
            if (tor && (i < 1 || i > v - 2 * mu)) r.fail("torsion at " + cell(i, j, grp) + " violates 1 <= i <= v - 2mu");
        }
    }
    return r;
}

CheckReport check_h0_torsion_free(const Graph& g, const BigradedHomology& h) {
    auto r = start("h0-torsion-free", g, h.algebra);
    for (const auto& [ij, grp] : h.groups)
        if (ij.first == 0 && grp.has_torsion()) r.fail("torsion at " + cell(0, ij.second, grp));
    return r;
}

CheckReport check_euler(const Graph& g, const Algebra& a, const BigradedHomology& h) {
    auto r = start("euler", g, h.algebra);
    const auto e = euler_check(g, a, h);
    if (!e.passed) r.fail(e.to_string());
    return r;
}

CheckReport check_torsion_dichotomy(const Graph& g, const BigradedHomology& h) {
    auto r = start("torsion-dichotomy", g, h.algebra);
    const auto cyc = shortest_cycle_parity(g);
    const bool expect = !cyc.has_loop && cyc.girth.has_value();
    const bool found = h.has_torsion();
    if (expect != found)
        r.fail(std::string(expect ? "expected torsion, found none" : "unexpected torsion found"));
    const int v = g.vertex_count();
    if (!cyc.has_loop && cyc.has_odd_cycle && !h.at(1, v - 1).has_element_of_order(2))
        r.fail("odd cycle but no Z_2 in " + cell(1, v - 1, h.at(1, v - 1)));
    // Parallel edges do not change the homology, so the simple-graph case
    // covers every loopless graph whose simplification has an even cycle.
    if (!cyc.has_loop && cyc.has_even_cycle && !h.at(2, v - 2).has_element_of_order(2))
        r.fail("even cycle but no Z_2 in " + cell(2, v - 2, h.at(2, v - 2)));
    for (const auto& [ij, grp] : h.groups)
        for (const auto& d : grp.torsion)
            if (d != 2) r.notes.push_back("torsion of order other than 2 at " + cell(ij.first, ij.second, grp));
    return r;
}

CheckReport check_vanishing(const Graph& g, const Algebra& a) { return check_vanishing(g, compute_all(g, a)); }

CheckReport check_thickness(const Graph& g, const Algebra& a) { return check_thickness(g, a, compute_all(g, a)); }

CheckReport check_torsion_dichotomy(const Graph& g) {
    return check_torsion_dichotomy(g, compute_all(g, make_truncated(2)));
}

BigradedHomology tensor_with_augmentation(const BigradedHomology& h, const Algebra& a) {
    if (!a.graded()) throw std::invalid_argument("the tensor with A' needs a graded algebra");
    BigradedHomology out;
    out.algebra = h.algebra;
    out.graph = h.graph;
    out.window = h.window;
    out.graded = h.graded;
    out.j_min = h.j_min;
    out.j_max = h.j_max + a.max_degree();
    for (const auto& [ij, grp] : h.groups)
        for (int k = 0; k < a.rank(); ++k)
            if (a.degree(k) > 0) out.groups[{ij.first, ij.second + a.degree(k)}] += grp;
    return out;
}

CheckReport check_pendant(const Graph& g, std::size_t e, const Algebra& a) {
    if (e >= g.edge_count()) throw std::out_of_range("edge index out of range");
    if (!is_pendant(g, e)) throw std::invalid_argument("edge " + std::to_string(e) + " is not pendant");
    auto r = start("pendant", g, a.spec());
    r.notes.push_back("edge " + std::to_string(e));
    const auto hg = compute_all(g, a);
    const auto hc = tensor_with_augmentation(compute_all(contract_edge(g, e), a), a);
    fail_all(r, differences(hg, hc));
    return r;
}

CheckReport check_del_contract_exactness(const Graph& g, std::size_t e, const Algebra& a) {
    if (e >= g.edge_count()) throw std::out_of_range("edge index out of range");
    if (g.edge(e).is_loop()) throw std::invalid_argument("cannot contract a loop");
    auto r = start("del-contract-exactness", g, a.spec());
    r.notes.push_back("edge " + std::to_string(e));

    // With e last, every other edge keeps its index in G - e and G / e.
    const Graph G = move_edge_last(g, e);
    const int n = static_cast<int>(G.edge_count());
    const std::size_t last = G.edge_count() - 1;
    const EdgeMask last_bit = EdgeMask{1} << last;
    const Graph D = delete_edge(G, last);
    const Graph C = contract_edge(G, last);
    const int keep = std::min(G.edge(last).u, G.edge(last).w);
    const int gone = std::max(G.edge(last).u, G.edge(last).w);
    auto vertex_map = [&](int x) { return x == gone ? keep : (x > gone ? x - 1 : x); };

    const int jtop = a.graded() ? max_state_degree(G, a) : 0;
    for (int j = 0; j <= jtop; ++j) {
        std::vector<StateBasis> bG, bD, bC;
        for (int i = 0; i <= n + 1; ++i) {
            bG.push_back(basis_or_empty(G, a, i, j));
            bD.push_back(basis_or_empty(D, a, i, j));
            // bC[i] holds C^{i-1}(G/e), aligned with C^i(G).
            bC.push_back(basis_or_empty(C, a, i - 1, j));
        }

        auto alpha = [&](int i) {
            IntMatrix m(static_cast<int>(bG[i].size()), static_cast<int>(bC[i].size()));
            for (std::size_t k = 0; k < bC[i].size(); ++k) {
                const auto s = bC[i].state(k);
                const auto pc = components(C, s.subset);
                const auto pg = components(G, s.subset | last_bit);
                std::vector<int> coloring(pg.component_count, -1);
                for (int x = 0; x < G.vertex_count(); ++x) {
                    int& slot = coloring[pg.component_id[x]];
                    if (slot < 0) slot = s.coloring[pc.component_id[vertex_map(x)]];
                }
                const auto idx = bG[i].index_of(EnhancedState{s.subset | last_bit, coloring});
                if (!idx) throw std::logic_error("alpha image is not a basis state");
                m.set_column(static_cast<int>(k), {{static_cast<int>(*idx), Integer(1)}});
            }
            return m;
        };
        auto beta = [&](int i) {
            IntMatrix m(static_cast<int>(bD[i].size()), static_cast<int>(bG[i].size()));
            for (std::size_t k = 0; k < bG[i].size(); ++k) {
                const auto s = bG[i].state(k);
                if (s.subset & last_bit) continue;
                const auto idx = bD[i].index_of(s);
                if (!idx) throw std::logic_error("beta image is not a basis state");
                m.set_column(static_cast<int>(k), {{static_cast<int>(*idx), Integer(1)}});
            }
            return m;
        };

        std::vector<IntMatrix> A, B;
        for (int i = 0; i <= n + 1; ++i) {
            A.push_back(alpha(i));
            B.push_back(beta(i));
        }
        for (int i = 0; i <= n; ++i) {
            const std::string at = "(i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + "): ";
            if (bG[i].size() != bC[i].size() + bD[i].size()) r.fail(at + "dimensions do not add up");
            const auto sa = smith_normal_form(A[i]);
            const auto sb = smith_normal_form(B[i]);
            if (sa.rank != bC[i].size() || !sa.torsion.empty()) r.fail(at + "alpha is not split injective");
            if (sb.rank != bD[i].size() || !sb.torsion.empty()) r.fail(at + "beta is not surjective");
            if (!(B[i] * A[i]).is_zero()) r.fail(at + "beta . alpha != 0");
            if (bG[i].size() - sb.rank != sa.rank) r.fail(at + "ker beta != im alpha");

            const auto dG = differential(G, a, bG[i], bG[i + 1]);
            const auto dD = differential(D, a, bD[i], bD[i + 1]);
            const auto dC = differential(C, a, bC[i], bC[i + 1]);
            if (!(dG * A[i] == A[i + 1] * dC)) r.fail(at + "alpha does not commute with d");
            if (!(B[i + 1] * dG == dD * B[i])) r.fail(at + "beta does not commute with d");
        }
    }
    return r;
}

BigradedHomology polygon_closed_form_a2(int n) {
    if (n < 1) throw std::invalid_argument("polygon needs n >= 1");
    BigradedHomology h;
    h.algebra = "trunc:2";
    h.graph = gen::cycle(n).fingerprint();
    h.j_max = n;
    auto free_at = [&](int i, int j) { h.groups[{i, j}] += AbelianGroup{1, {}}; };
    for (int i = 1; i <= n; ++i) {
        const int k = n - i;
        if (k < 2) continue;
        if (k % 2 == 0) {
            h.groups[{i, k}] += AbelianGroup::from_cyclic(0, {2});
            free_at(i, k - 1);
        } else {
            free_at(i, k);
        }
    }
    if (n >= 2) {
        free_at(0, n);
        if (n % 2 == 0) free_at(0, n - 1);
    }
    return h;
}

CheckReport check_polygon_formula(int n) {
    const auto a = make_truncated(2);
    const auto g = gen::cycle(n);
    auto r = start("polygon-formula", g, a.spec());
    fail_all(r, differences(compute_all(g, a), polygon_closed_form_a2(n)));
    return r;
}

CheckReport check_polygon_recursion(int n, const Algebra& a) {
    const auto g = gen::cycle(n);
    auto r = start("polygon-recursion", g, a.spec());
    const auto hn = compute_all(g, a);
    const auto hn1 = compute_all(gen::cycle(n + 1), a);
    std::set<Bidegree> keys;
    for (const auto& [ij, grp] : hn.groups)
        if (ij.first >= 1) keys.insert(ij);
    for (const auto& [ij, grp] : hn1.groups)
        if (ij.first >= 2) keys.insert({ij.first - 1, ij.second});
    for (const auto& [i, j] : keys)
        if (!(hn.at(i, j) == hn1.at(i + 1, j)))
            r.fail(cell(i, j) + "(P_n) = " + hn.at(i, j).to_string() + " but " + cell(i + 1, j) +
                   "(P_{n+1}) = " + hn1.at(i + 1, j).to_string());
    return r;
}

CheckReport check_p3_Am(int m) {
    if (m < 2) throw std::invalid_argument("needs m >= 2");
    const auto a = make_truncated(m);
    const auto g = gen::cycle(3);
    auto r = start("p3-Am", g, a.spec());
    const auto h = compute_all(g, a);
    for (const auto& [ij, grp] : h.groups) {
        if (!grp.has_torsion()) continue;
        if (ij != Bidegree{1, m}) r.fail("torsion at " + cell(ij.first, ij.second, grp));
    }
    const auto tor = h.at(1, m).torsion;
    if (tor != std::vector<Integer>{Integer(m)})
        r.fail("torsion of " + cell(1, m, h.at(1, m)) + " is not Z_" + std::to_string(m));
    const Poly q = positive_part(m);
    Poly2 expected = Poly2::from_q(q * q * q, 0);
    expected += Poly2::from_q(q, 1);
    const auto got = poincare_series(h);
    if (!(got == expected)) r.fail("Poincare polynomial " + got.to_string() + " != " + expected.to_string());
    return r;
}

std::optional<AbelianGroup> deformed_p3_closed_form(const std::vector<std::int64_t>& p) {
    if (p.empty() || p.back() != 1) return std::nullopt;
    const int m = static_cast<int>(p.size()) - 1;
    const bool lower_zero = std::all_of(p.begin(), p.end() - 1, [](std::int64_t c) { return c == 0; });
    if (lower_zero) return AbelianGroup::from_cyclic(static_cast<std::uint64_t>(m - 1), {Integer(m)});
    if (m == 2) {
        // x^2 - b x - a
        const Integer b = -from_int64(p[1]);
        const Integer a = -from_int64(p[0]);
        const Integer disc = b * b + 4 * a;
        if (disc == 0) return AbelianGroup::from_cyclic(1, {Integer(2)});
        if (b % 2 != 0) return AbelianGroup::from_cyclic(0, {abs(disc)});
        return AbelianGroup::from_cyclic(0, {Integer(2), abs(disc) / 2});
    }
    const bool minus_one =
        p[0] == -1 && std::all_of(p.begin() + 1, p.end() - 1, [](std::int64_t c) { return c == 0; });
    if (minus_one) return AbelianGroup::from_cyclic(0, std::vector<Integer>(m, Integer(m)));
    return std::nullopt;
}

CheckReport check_deformed_p3(const std::vector<std::int64_t>& p,
                              const std::optional<std::vector<int>>& root_multiplicities) {
    const auto a = make_deformed(p);
    const auto g = gen::cycle(3);
    auto r = start("deformed-p3", g, a.spec());
    const auto h = compute_all(g, a);
    const Poly poly = from_coefficients(p);
    const Poly dp = derivative(poly);
    const auto h1 = h.height(1);
    const auto oracle = cokernel_oracle({poly, dp});
    r.notes.push_back("H^1 = " + h1.to_string());
    if (!(h1 == oracle)) r.fail("H^1 = " + h1.to_string() + " but Z[x]/(p, p') = " + oracle.to_string());
    if (auto closed = deformed_p3_closed_form(p); closed && !(h1 == *closed))
        r.fail("H^1 = " + h1.to_string() + " but the closed form gives " + closed->to_string());

    const int m = static_cast<int>(p.size()) - 1;
    const int gcd_degree = rational_gcd_degree(poly, dp);
    if (h1.free_rank != static_cast<std::uint64_t>(gcd_degree))
        r.fail("rank H^1 = " + std::to_string(h1.free_rank) + " but deg gcd(p, p') = " + std::to_string(gcd_degree));
    if (root_multiplicities) {
        int excess = 0;
        for (int mul : *root_multiplicities) excess += mul - 1;
        if (h1.free_rank != static_cast<std::uint64_t>(excess))
            r.fail("rank H^1 = " + std::to_string(h1.free_rank) + " but the root multiplicities give " +
                   std::to_string(excess));
    }
    const auto h0 = h.height(0);
    const auto expect0 = static_cast<std::uint64_t>(m * (m - 1) * (m - 2) + gcd_degree);
    if (h0.has_torsion() || h0.free_rank != expect0)
        r.fail("H^0 = " + h0.to_string() + ", expected Z^" + std::to_string(expect0));
    return r;
}

CheckReport check_vgon_diagonals(const Graph& g, const Algebra& a) {
    auto r = start("vgon-diagonals", g, a.spec());
    const int v = g.vertex_count();
    const auto h = compute_all(g, a);
    const auto p3 = compute_all(gen::cycle(3), a);
    std::set<int> degrees;
    for (const auto& [ij, grp] : h.groups)
        if (ij.first == v - 2) degrees.insert(ij.second);
    for (const auto& [ij, grp] : p3.groups)
        if (ij.first == 1) degrees.insert(ij.second);
    for (int j : degrees)
        if (!(h.at(v - 2, j) == p3.at(1, j)))
            r.fail(cell(v - 2, j, h.at(v - 2, j)) + " but for the triangle " + cell(1, j, p3.at(1, j)));
    if (a.spec().rfind("trunc:", 0) == 0) {
        const int m = a.rank();
        if (!(h.at(v - 2, m) == AbelianGroup::from_cyclic(0, {Integer(m)})))
            r.fail(cell(v - 2, m, h.at(v - 2, m)) + " is not Z_" + std::to_string(m));
    }
    return r;
}

CheckReport check_polygon_h1_conjecture(int m, int v) {
    if (v < 3 || m < 2) throw std::invalid_argument("needs v >= 3 and m >= 2");
    const auto a = make_truncated(m);
    const auto g = gen::cycle(v);
    auto r = start("polygon-h1-conjecture", g, a.spec());
    r.soft = true;
    const auto h = compute_all(g, a);
    const Poly q = positive_part(m);
    Poly expected_free;
    std::map<int, std::vector<Integer>> expected_torsion;
    if (v % 2 == 1) {
        const int gg = (v - 1) / 2;
        expected_free = Poly::monomial((gg - 1) * m) * q;
        expected_torsion[gg * m] = {Integer(m)};
    } else {
        const int gg = (v - 2) / 2;
        expected_free = Poly::monomial(gg * m) * q;
    }
    Poly got_free;
    std::map<int, std::vector<Integer>> got_torsion;
    for (const auto& [ij, grp] : h.groups) {
        if (ij.first != 1) continue;
        if (grp.free_rank) got_free.add_term(ij.second, Integer(static_cast<unsigned long>(grp.free_rank)));
        if (grp.has_torsion()) got_torsion[ij.second] = grp.torsion;
    }
    if (!(got_free == expected_free))
        r.fail("free part of H^1 is " + got_free.to_string('q') + ", conjectured " + expected_free.to_string('q'));
    if (got_torsion != expected_torsion) {
        std::string s;
        for (const auto& [j, t] : got_torsion) s += cell(1, j, h.at(1, j)) + " ";
        r.fail("torsion of H^1: " + (s.empty() ? std::string("none") : s));
    }
    return r;
}

CheckReport check_cycle_torsion_conjecture(const Graph& g, int m) {
    const auto a = make_truncated(m);
    auto r = start("cycle-torsion-conjecture", g, a.spec());
    r.soft = true;
    if (g.has_loop()) {
        r.notes.push_back("graph has a loop: conjecture does not apply");
        return r;
    }
    const auto h = compute_all(g, a);
    const bool tri = contains_triangle(g), sq = contains_square(g);
    r.notes.push_back(std::string("triangle: ") + (tri ? "yes" : "no") + ", square: " + (sq ? "yes" : "no") +
                      ", H^1 = " + h.height(1).to_string() + ", H^2 = " + h.height(2).to_string());
    if (tri && !h.height(1).has_element_of_order(m)) r.fail("triangle but no Z_" + std::to_string(m) + " in H^1");
    if (sq && !h.height(2).has_element_of_order(m)) r.fail("square but no Z_" + std::to_string(m) + " in H^2");
    return r;
}

CheckReport check_roots_of_unity_conjecture(int m, int v) {
    if (v < 2 || m < 1) throw std::invalid_argument("needs v >= 2 and m >= 1");
    std::vector<std::int64_t> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[m] = 1;
    const auto a = make_deformed(p);
    const auto g = gen::cycle(v);
    auto r = start("roots-of-unity-conjecture", g, a.spec());
    r.soft = true;
    const auto h1 = compute_all(g, a).height(1);
    const auto expected = v % 2 == 0 ? AbelianGroup{} : AbelianGroup::from_cyclic(0, std::vector<Integer>(m, Integer(m)));
    r.notes.push_back("H^1 = " + h1.to_string());
    if (!(h1 == expected)) r.fail("H^1 = " + h1.to_string() + ", conjectured " + expected.to_string());
    return r;
}

std::vector<CheckReport> check_conjecture_fixtures() {
    std::vector<CheckReport> out;
    const auto a3 = make_truncated(3);

    {
        const auto g = gen::cycle(5);
        auto r = start("published-fixture", g, a3.spec());
        const auto grp = compute_all(g, a3).at(1, 6);
        if (!(grp == AbelianGroup::from_cyclic(0, {Integer(3)}))) r.fail(cell(1, 6, grp) + ", expected Z_3");
        out.push_back(r);
    }
    {
        const auto g = gen::cycle(4);
        auto r = start("published-fixture", g, a3.spec());
        const auto h = compute_all(g, a3);
        BigradedHomology expected;
        expected.groups[{1, 4}] = AbelianGroup{1, {}};
        expected.groups[{1, 5}] = AbelianGroup{1, {}};
        for (const auto& [ij, grp] : h.groups)
            if (ij.first == 1 && !(grp == expected.at(1, ij.second))) r.fail(cell(1, ij.second, grp));
        for (const auto& [ij, grp] : expected.groups)
            if (!(h.at(1, ij.second) == grp)) r.fail(cell(1, ij.second, h.at(1, ij.second)) + ", expected Z");
        out.push_back(r);
    }
    {
        const auto g = gen::complete(4);
        auto r = start("published-fixture", g, a3.spec());
        const auto grp = compute_all(g, a3).at(1, 5);
        const auto expected = AbelianGroup::from_cyclic(2, {Integer(3), Integer(3), Integer(6)});
        if (!(grp == expected)) r.fail(cell(1, 5, grp) + ", expected " + expected.to_string());
        out.push_back(r);
    }
    for (int m : {2, 3}) {
        const auto g = gen::polygon_with_diagonals(4, {{0, 2}});
        const auto a = make_truncated(m);
        auto r = start("published-fixture", g, a.spec());
        const auto grp = compute_all(g, a).at(2, m);
        if (!(grp == AbelianGroup::from_cyclic(0, {Integer(m)})))
            r.fail(cell(2, m, grp) + ", expected Z_" + std::to_string(m));
        out.push_back(r);
    }

    for (int m : {2, 3})
        for (int v : {4, 5, 6}) out.push_back(check_polygon_h1_conjecture(m, v));

    const Graph tri = gen::cycle(3), sq = gen::cycle(4);
    const std::vector<Graph> small = {
        tri,
        sq,
        gen::cycle(5),
        gen::complete(4),
        gen::polygon_with_diagonals(4, {{0, 2}}),
        gen::wedge(tri, tri),
        gen::wedge(tri, gen::path(2)),
        gen::wedge(sq, gen::path(2)),
        gen::polygon_with_diagonals(5, {{0, 2}}),
        Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}),  // K_{2,3}
    };
    for (const auto& g : small)
        for (int m : {2, 3}) out.push_back(check_cycle_torsion_conjecture(g, m));

    for (int m : {2, 3})
        for (int v : {3, 4, 5}) out.push_back(check_roots_of_unity_conjecture(m, v));
    return out;
}

namespace {

// Every permutation of 0..n-1.
std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

std::vector<Graph> connected_simple_graphs(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    if (n > 7) throw std::invalid_argument("exhaustive enumeration is limited to 7 vertices");
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            index[u][w] = index[w][u] = static_cast<int>(pairs.size());
            pairs.emplace_back(u, w);
        }
    const int k = static_cast<int>(pairs.size());
    // For each permutation, where each edge bit goes.
    std::vector<std::vector<int>> bit_maps;
    for (const auto& p : permutations(n)) {
        std::vector<int> map(k);
        for (int b = 0; b < k; ++b) map[b] = index[p[pairs[b].first]][p[pairs[b].second]];
        bit_maps.push_back(std::move(map));
    }

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        if (std::popcount(mask) < n - 1) continue;
        std::vector<Edge> edges;
        for (int b = 0; b < k; ++b)
            if (mask >> b & 1) edges.push_back({pairs[b].first, pairs[b].second});
        Graph g(n, edges);
        if (components(g, g.full_mask()).component_count != 1) continue;
        std::uint32_t canon = mask;
        for (const auto& map : bit_maps) {
            std::uint32_t image = 0;
            for (int b = 0; b < k; ++b)
                if (mask >> b & 1) image |= std::uint32_t{1} << map[b];
            canon = std::min(canon, image);
        }
        // Masks are visited in ascending order, so each class is kept once,
        // at its smallest labelling.
        if (canon == mask) out.push_back(std::move(g));
    }
    return out;
}

namespace {

std::vector<std::vector<bool>> adjacency(const Graph& g) {
    std::vector<std::vector<bool>> adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
    for (const auto& e : g.edges())
        if (!e.is_loop()) adj[e.u][e.w] = adj[e.w][e.u] = true;
    return adj;
}

}  // namespace

bool contains_triangle(const Graph& g) {
    const auto adj = adjacency(g);
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (adj[a][b] && adj[b][c] && adj[a][c]) return true;
    return false;
}

bool contains_square(const Graph& g) {
    const auto adj = adjacency(g);
    const int n = g.vertex_count();
    // Two distinct vertices with two common neighbours.
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) {
            int common = 0;
            for (int b = 0; b < n; ++b)
                if (b != a && b != c && adj[a][b] && adj[b][c]) ++common;
            if (common >= 2) return true;
        }
    return false;
}

Graph random_simple_graph(std::mt19937_64& rng, int vertices, int max_edges) {
    std::vector<Edge> all;
    for (int u = 0; u < vertices; ++u)
        for (int w = u + 1; w < vertices; ++w) all.push_back({u, w});
    std::shuffle(all.begin(), all.end(), rng);
    const int cap = std::min<int>(max_edges, static_cast<int>(all.size()));
    const int count = std::uniform_int_distribution<int>(0, cap)(rng);
    all.resize(static_cast<std::size_t>(count));
    return Graph(vertices, all);
}

Graph random_multigraph(std::mt19937_64& rng, int max_vertices, int max_edges) {
    const int v = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    const int n = std::uniform_int_distribution<int>(0, max_edges)(rng);
    std::uniform_int_distribution<int> vertex(0, v - 1);
    std::uniform_int_distribution<int> kind(0, 9);
    std::vector<Edge> edges;
    for (int k = 0; k < n; ++k) {
        const int u = vertex(rng);
        const int choice = kind(rng);
        if (choice == 0) {
            edges.push_back({u, u});
        } else if (choice == 1 && !edges.empty()) {
            edges.push_back(edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)]);
        } else {
            edges.push_back({u, vertex(rng)});
        }
    }
    return Graph(v, edges);
}

namespace {

// The per-graph checks that only need one homology computation.
std::vector<CheckReport> structural_checks(const Graph& g, const Algebra& a) {
    const auto h = compute_all(g, a);
    std::vector<CheckReport> out = {check_vanishing(g, h), check_thickness(g, a, h), check_h0_torsion_free(g, h),
                                    check_euler(g, a, h)};
    if (a.spec() == "trunc:2") out.push_back(check_torsion_dichotomy(g, h));
    return out;
}

}  // namespace

std::vector<CheckReport> run_paper_suite(const SuiteOptions& options) {
    std::vector<std::function<std::vector<CheckReport>()>> jobs;
    auto one = [&](std::function<CheckReport()> f) {
        jobs.push_back([f] { return std::vector<CheckReport>{f()}; });
    };

    const std::vector<Algebra> algebras = {make_truncated(2), make_truncated(3)};
    std::vector<Graph> fixtures;
    for (int n = 1; n <= 8; ++n) fixtures.push_back(gen::cycle(n));
    fixtures.push_back(gen::complete(4));
    fixtures.push_back(gen::polygon_with_diagonals(4, {{0, 2}}));
    fixtures.push_back(gen::wedge(gen::cycle(3), gen::cycle(3)));
    std::mt19937_64 rng(options.seed);
    for (int k = 0; k < options.random_graphs; ++k)
        fixtures.push_back(random_simple_graph(rng, std::uniform_int_distribution<int>(2, 6)(rng), 8));

    for (const auto& g : fixtures)
        for (const auto& a : algebras) {
            jobs.push_back([g, a] { return structural_checks(g, a); });
            for (std::size_t e = 0; e < g.edge_count(); ++e)
                if (is_pendant(g, e) && g.edge_count() > 1) {
                    one([g, e, a] { return check_pendant(g, e, a); });
                    break;
                }
        }

    for (int n = 1; n <= 8; ++n) one([n] { return check_polygon_formula(n); });
    for (const auto& a : algebras)
        for (int n = 3; n <= 6; ++n) one([n, a] { return check_polygon_recursion(n, a); });
    for (int m = 2; m <= 5; ++m) one([m] { return check_p3_Am(m); });
    for (const auto& g : {gen::cycle(3), gen::cycle(4), gen::complete(4)})
        for (const auto& a : algebras) one([g, a] { return check_del_contract_exactness(g, 0, a); });

    const std::vector<std::pair<std::vector<std::int64_t>, std::vector<int>>> deformed = {
        {{0, 0, 1}, {2}},      {{0, 0, 0, 1}, {3}},      {{0, 0, 0, 0, 1}, {4}},
        {{0, -1, 1}, {1, 1}},  {{-3, -2, 1}, {1, 1}},    {{1, -2, 1}, {2}},
        {{-1, 0, 0, 1}, {1, 1, 1}}, {{-1, 0, 0, 0, 1}, {1, 1, 1, 1}},
    };
    for (const auto& [p, mult] : deformed) one([p, mult] { return check_deformed_p3(p, mult); });

    const std::vector<Graph> vgons = {gen::polygon_with_diagonals(4, {{0, 2}}),
                                      gen::polygon_with_diagonals(5, {{0, 2}, {0, 3}})};
    for (const auto& g : vgons)
        for (const auto& a : algebras) one([g, a] { return check_vgon_diagonals(g, a); });

    jobs.push_back([] { return check_conjecture_fixtures(); });

    std::vector<std::vector<CheckReport>> results(jobs.size());
    parallel_for(jobs.size(), options.threads, [&](std::size_t k) { results[k] = jobs[k](); });
    std::vector<CheckReport> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::vector<std::string> check_names() {
    return {"vanishing", "thickness",       "h0-torsion-free",   "euler",          "torsion-dichotomy",
            "pendant",   "exactness",       "polygon-recursion", "vgon-diagonals", "cycle-torsion-conjecture"};
}

CheckReport run_named_check(const std::string& name, const Graph& g, const Algebra& a,
                            std::optional<std::size_t> edge) {
    if (name == "vanishing") return check_vanishing(g, a);
    if (name == "thickness") return check_thickness(g, a);
    if (name == "h0-torsion-free") return check_h0_torsion_free(g, compute_all(g, a));
    if (name == "euler") return check_euler(g, a, compute_all(g, a));
    if (name == "torsion-dichotomy") {
        if (a.spec() != "trunc:2") throw std::invalid_argument("torsion-dichotomy runs over trunc:2 only");
        return check_torsion_dichotomy(g);
    }
    if (name == "pendant") {
        if (!edge)
            for (std::size_t e = 0; e < g.edge_count() && !edge; ++e)
                if (is_pendant(g, e)) edge = e;
        if (!edge) throw std::invalid_argument("graph has no pendant edge");
        return check_pendant(g, *edge, a);
    }
    if (name == "exactness") {
        if (!edge)
            for (std::size_t e = 0; e < g.edge_count() && !edge; ++e)
                if (!g.edge(e).is_loop()) edge = e;
        if (!edge) throw std::invalid_argument("graph has no edge to contract");
        return check_del_contract_exactness(g, *edge, a);
    }
    if (name == "polygon-recursion") {
        if (!(g == gen::cycle(g.vertex_count()))) throw std::invalid_argument("polygon-recursion needs a polygon");
        return check_polygon_recursion(g.vertex_count(), a);
    }
    if (name == "vgon-diagonals") return check_vgon_diagonals(g, a);
    if (name == "cycle-torsion-conjecture") {
        if (a.spec().rfind("trunc:", 0) != 0)
            throw std::invalid_argument("cycle-torsion-conjecture runs over trunc:m only");
        return check_cycle_torsion_conjecture(g, a.rank());
    }
    throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace chromhom
