#include "chromhom/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "chromhom/complex.hpp"

namespace chromhom {

Poly chromatic_polynomial(const Graph& g) {
    if (g.edge_count() > 40) throw std::length_error("too many edges for the subset expansion");
    // counts[i][k]: subsets with i edges and k components.
    std::map<std::pair<int, int>, std::uint64_t> counts;
    for (EdgeMask s = 0;; ++s) {
        ++counts[{std::popcount(s), components(g, s).component_count}];
        if (s == g.full_mask()) break;
    }
    Poly p;
    for (const auto& [ik, n] : counts) {
        Integer c(static_cast<unsigned long>(n));
        p.add_term(ik.second, ik.first % 2 ? Integer(-c) : c);
    }
    return p;
}

namespace {

// Loop-free simplified graph with edges as sorted (min, max) pairs; isolated
// vertices only contribute a factor lambda each.
std::string normalized_key(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(std::minmax(e.u, e.w));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::string key = std::to_string(g.vertex_count()) + ":";
    for (auto [a, b] : edges) key += std::to_string(a) + "-" + std::to_string(b) + ",";
    return key;
}

Poly dc(const Graph& g, std::unordered_map<std::string, Poly>& memo) {
    if (g.has_loop()) return {};
    const Graph s = simplify(g);
    if (s.edge_count() == 0) return Poly::monomial(s.vertex_count());
    const auto key = normalized_key(s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t e = s.edge_count() - 1;
    Poly result = dc(delete_edge(s, e), memo) - dc(contract_edge(s, e), memo);
    memo.emplace(key, result);
    return result;
}

}  // namespace

Poly chromatic_polynomial_dc(const Graph& g) {
    std::unordered_map<std::string, Poly> memo;
    return dc(g, memo);
}

std::string EulerCheck::to_string() const {
    std::ostringstream out;
    out << (passed ? "pass" : "FAIL") << ": chi_q = " << homology_side.to_string('q')
        << ", P_G(qdim A) = " << chromatic_side.to_string('q');
    for (const auto& [j, r] : residuals)
        out << "\n  q^" << j << ": homology " << r.first.get_str() << " vs chromatic " << r.second.get_str();
    return out.str();
}

EulerCheck euler_check(const Graph& g, const Algebra& a, const BigradedHomology& h) {
    EulerCheck check;
    for (const auto& [ij, grp] : h.groups) {
        const Integer rank(static_cast<unsigned long>(grp.free_rank));
        check.homology_side.add_term(ij.second, ij.first % 2 ? Integer(-rank) : rank);
    }
    for (const auto& [ij, dim] : chain_dimensions(g, a)) {
        if (ij.second < h.j_min || ij.second > h.j_max) continue;
        const Integer d(static_cast<unsigned long>(dim));
        check.chain_side.add_term(ij.second, ij.first % 2 ? Integer(-d) : d);
    }

    const Poly chromatic = chromatic_polynomial(g);
    Poly lambda;
    if (a.graded()) {
        for (auto [deg, count] : qdim(a)) lambda.add_term(deg, count);
    } else {
        lambda = Poly::constant(a.rank());
    }
    const Poly composed = chromatic.compose(lambda);
    for (const auto& [e, c] : composed.terms())
        if (e >= h.j_min && e <= h.j_max) check.chromatic_side.add_term(e, c);

    for (int j = h.j_min; j <= h.j_max; ++j) {
        const Integer hs = check.homology_side.coeff(j);
        const Integer cs = check.chromatic_side.coeff(j);
        if (hs != cs || check.chain_side.coeff(j) != cs) check.residuals[j] = {hs, cs};
    }
    check.passed = check.residuals.empty();
    return check;
}

}  // namespace chromhom
