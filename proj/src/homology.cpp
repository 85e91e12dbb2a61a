#include "chromhom/homology.hpp"

#include <algorithm>
#include <sstream>

#include "chromhom/complex.hpp"
#include "chromhom/int_matrix.hpp"
#include "chromhom/parallel.hpp"

namespace chromhom {

AbelianGroup AbelianGroup::from_cyclic(std::uint64_t free_rank, std::vector<Integer> orders) {
    std::erase_if(orders, [](const Integer& x) { return x == 0 || abs(x) == 1; });
    AbelianGroup g;
    g.free_rank = free_rank;
    g.torsion = invariant_factors_from_diagonal(std::move(orders));
    std::erase_if(g.torsion, [](const Integer& x) { return x == 1; });
    return g;
}

bool AbelianGroup::has_element_of_order(const Integer& k) const {
    if (k == 1) return true;
    return std::any_of(torsion.begin(), torsion.end(),
                       [&](const Integer& d) { return d % k == 0; });
}

AbelianGroup& AbelianGroup::operator+=(const AbelianGroup& o) {
    auto orders = torsion;
    orders.insert(orders.end(), o.torsion.begin(), o.torsion.end());
    *this = from_cyclic(free_rank + o.free_rank, std::move(orders));
    return *this;
}

std::string AbelianGroup::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank) {
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    for (std::size_t k = 0; k < torsion.size();) {
        std::size_t run = 1;
        while (k + run < torsion.size() && torsion[k + run] == torsion[k]) ++run;
        out << (first ? "" : " + ") << "Z_" << torsion[k].get_str();
        if (run > 1) out << "^" << run;
        first = false;
        k += run;
    }
    return out.str();
}

std::vector<std::pair<Integer, int>> primary_decomposition(const AbelianGroup& g) {
    std::map<Integer, int> counts;
    for (Integer d : g.torsion) {
        for (Integer p = 2; p * p <= d; ++p) {
            if (d % p != 0) continue;
            Integer q = 1;
            while (d % p == 0) {
                d /= p;
                q *= p;
            }
            ++counts[q];
        }
        if (d > 1) ++counts[d];
    }
    return {counts.begin(), counts.end()};
}

AbelianGroup BigradedHomology::at(int i, int j) const {
    auto it = groups.find({i, j});
    return it == groups.end() ? AbelianGroup{} : it->second;
}

AbelianGroup BigradedHomology::height(int i) const {
    AbelianGroup sum;
    for (const auto& [ij, g] : groups)
        if (ij.first == i) sum += g;
    return sum;
}

bool BigradedHomology::has_torsion() const {
    return std::any_of(groups.begin(), groups.end(), [](const auto& kv) { return kv.second.has_torsion(); });
}

AbelianGroup homology_group(std::uint64_t dim, const SNFResult& d_in, std::size_t d_out_rank) {
    if (d_in.rank + d_out_rank > dim)
        throw std::logic_error("rank(d_in) + rank(d_out) exceeds the chain group dimension");
    AbelianGroup g;
    g.free_rank = dim - d_out_rank - d_in.rank;
    g.torsion = d_in.torsion;
    return g;
}

std::uint64_t estimate_memory(const Graph& g, const Algebra& a, int threads) {
    if (g.edge_count() > 40) return ~std::uint64_t{0};
    const auto dims = chain_dimensions(g, a);
    const std::uint64_t state_bytes = 8 + static_cast<std::uint64_t>(g.vertex_count());
    const std::uint64_t r = static_cast<std::uint64_t>(a.rank());
    std::vector<std::uint64_t> slice;
    for (const auto& [ij, dim] : dims) {
        auto next = dims.find({ij.first + 1, ij.second});
        const std::uint64_t target = next == dims.end() ? 0 : next->second;
        const std::uint64_t missing = g.edge_count() - static_cast<std::uint64_t>(ij.first);
        // Two bases, the assembled matrix and a working copy during elimination.
        slice.push_back((dim + target) * state_bytes + 2 * dim * missing * r * 48);
    }
    std::sort(slice.rbegin(), slice.rend());
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < slice.size() && k < static_cast<std::size_t>(std::max(1, threads)); ++k)
        total += slice[k];
    return total;
}

BigradedHomology compute_all(const Graph& g, const Algebra& a, const ComputeOptions& options) {
    BigradedHomology h;
    h.algebra = a.spec();
    h.graph = g.fingerprint();
    h.window = a.window();
    h.graded = a.graded();

    const int jtop = max_state_degree(g, a);
    int jlo = 0, jhi = jtop;
    if (options.j_range) {
        std::tie(jlo, jhi) = *options.j_range;
        if (auto w = a.window(); w && jhi > *w)
            throw std::out_of_range("requested degree " + std::to_string(jhi) +
                                    " lies above the Z[x] window " + std::to_string(*w));
        jlo = std::max(jlo, 0);
    }
    if (!a.graded()) jlo = jhi = 0;
    h.j_min = jlo;
    h.j_max = jhi;

    const auto need = estimate_memory(g, a, options.threads);
    if (need > options.memory_cap_bytes)
        throw ResourceLimitError("estimated memory " + std::to_string(need) + " bytes exceeds the cap of " +
                                 std::to_string(options.memory_cap_bytes) + " bytes");

    const auto dims = chain_dimensions(g, a);
    auto dim_of = [&](int i, int j) -> std::uint64_t {
        auto it = dims.find({i, j});
        return it == dims.end() ? 0 : it->second;
    };

    // One job per nonzero differential d^{i,j}, largest first.
    struct Job {
        int i, j;
        std::uint64_t weight;
    };
    std::vector<Job> jobs;
    const int n = static_cast<int>(g.edge_count());
    for (int j = jlo; j <= jhi; ++j)
        for (int i = 0; i < n; ++i)
            if (dim_of(i, j) && dim_of(i + 1, j)) jobs.push_back({i, j, dim_of(i, j) * dim_of(i + 1, j)});
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) { return x.weight > y.weight; });

    std::vector<SNFResult> results(jobs.size());
    parallel_for(jobs.size(), options.threads, [&](std::size_t k) {
        results[k] = smith_normal_form(differential(g, a, jobs[k].i, jobs[k].j));
    });
    std::map<Bidegree, const SNFResult*> snf;
    for (std::size_t k = 0; k < jobs.size(); ++k) snf[{jobs[k].i, jobs[k].j}] = &results[k];

    const SNFResult none;
    for (int j = jlo; j <= jhi; ++j) {
        for (int i = 0; i <= n; ++i) {
            const auto dim = dim_of(i, j);
            if (!dim) continue;
            auto in = snf.find({i - 1, j});
            auto out = snf.find({i, j});
            auto group = homology_group(dim, in == snf.end() ? none : *in->second,
                                        out == snf.end() ? 0 : out->second->rank);
            if (!group.is_zero()) h.groups.emplace(Bidegree{i, j}, std::move(group));
        }
    }
    for (const auto& [ij, grp] : h.groups)
        if (ij.first == 0 && grp.has_torsion())
            throw std::logic_error("torsion found in H^0, which is a subgroup of a free group");
    return h;
}

Poly2 poincare_series(const BigradedHomology& h) {
    Poly2 p;
    for (const auto& [ij, g] : h.groups)
        if (g.free_rank) p.add_term(ij.first, ij.second, Integer(static_cast<unsigned long>(g.free_rank)));
    return p;
}

AbelianGroup cokernel_oracle(const std::vector<Poly>& generators, std::optional<int> degree_bound) {
    int monic_degree = -1;
    int max_degree = 0;
    for (const auto& p : generators) {
        if (p.is_zero()) continue;
        if (p.terms().begin()->first < 0) throw std::invalid_argument("negative exponent in generator");
        max_degree = std::max(max_degree, p.degree());
        if (abs(p.coeff(p.degree())) == 1 && (monic_degree < 0 || p.degree() < monic_degree))
            monic_degree = p.degree();
    }
    if (monic_degree < 0)
        throw std::invalid_argument("no monic generator: the quotient is not finitely generated");
    const int needed = monic_degree + max_degree;
    const int bound = degree_bound.value_or(needed);
    if (bound < needed)
        throw std::invalid_argument("degree bound " + std::to_string(bound) + " is below the required " +
                                    std::to_string(needed));

    std::vector<IntMatrix::Column> columns;
    for (const auto& p : generators) {
        if (p.is_zero()) continue;
        for (int shift = 0; shift + p.degree() < bound; ++shift) {
            IntMatrix::Column col;
            for (const auto& [e, c] : p.terms()) col.emplace_back(e + shift, c);
            columns.push_back(std::move(col));
        }
    }
    IntMatrix m(bound, static_cast<int>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(static_cast<int>(c), std::move(columns[c]));
    const auto snf = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = static_cast<std::uint64_t>(bound) - snf.rank;
    g.torsion = snf.torsion;
    return g;
}

}  // namespace chromhom
