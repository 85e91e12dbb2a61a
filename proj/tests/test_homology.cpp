#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "chromhom/homology.hpp"
#include "chromhom/io.hpp"
#include "chromhom/theorems.hpp"
#include "oracles.hpp"

using namespace chromhom;

namespace {

AbelianGroup Zfree(std::uint64_t r) { return AbelianGroup{r, {}}; }
AbelianGroup Zmod(long n) { return AbelianGroup::from_cyclic(0, {Integer(n)}); }

std::vector<Integer> factors_of(const std::vector<std::vector<long>>& rows, const SNFOptions& opts = {}) {
    return smith_normal_form(IntMatrix::from_dense(rows), opts).factors();
}

}  // namespace

TEST_CASE("Smith normal form examples") {
    CHECK(factors_of({{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(IntMatrix(3, 4)).rank == 0);
    CHECK(factors_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == std::vector<Integer>{1, 1, 1});
    CHECK(factors_of({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<Integer>{2, 6, 12});
    CHECK(invariant_factors_from_diagonal({Integer(4), Integer(6), Integer(0), Integer(-3)}) ==
          std::vector<Integer>{1, 6, 12});
}

TEST_CASE("Smith normal form against the minor-gcd oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(1, 6), entry(-9, 9), density(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = size(rng), c = size(rng);
        std::vector<std::vector<long>> rows(r, std::vector<long>(c, 0));
        oracle::Dense dense(r, std::vector<Integer>(c));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                rows[i][j] = density(rng) ? entry(rng) : 0;
                dense[i][j] = rows[i][j];
            }
        const auto expected = oracle::minor_gcd_factors(dense);
        CAPTURE(trial);
        CHECK(factors_of(rows) == expected);
        CHECK(factors_of(rows, {.unit_phase = false, .try_int64 = true}) == expected);
        CHECK(factors_of(rows, {.unit_phase = true, .try_int64 = false}) == expected);
    }
}

TEST_CASE("Smith normal form survives 64-bit overflow") {
    const long big = 3037000499L;  // big^2 is close to 2^63
    std::vector<std::vector<long>> rows = {{big, big - 1, 7}, {big + 1, big, 3}, {5, big, big}};
    oracle::Dense dense(3, std::vector<Integer>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dense[i][j] = rows[i][j];
    CHECK(factors_of(rows) == oracle::minor_gcd_factors(dense));
}

TEST_CASE("abelian groups") {
    const auto g = AbelianGroup::from_cyclic(2, {Integer(2), Integer(3), Integer(1), Integer(0)});
    CHECK(g.free_rank == 2);
    CHECK(g.torsion == std::vector<Integer>{6});
    CHECK(g.to_string() == "Z^2 + Z_6");
    CHECK(g.has_element_of_order(2));
    CHECK(g.has_element_of_order(3));
    CHECK_FALSE(g.has_element_of_order(4));
    auto sum = Zmod(2);
    sum += Zmod(2);
    CHECK(sum.to_string() == "Z_2^2");
    const auto k4 = AbelianGroup::from_cyclic(2, {Integer(3), Integer(3), Integer(6)});
    CHECK(k4.to_string() == "Z^2 + Z_3^2 + Z_6");
    const auto primary = primary_decomposition(k4);
    CHECK(primary == std::vector<std::pair<Integer, int>>{{Integer(2), 1}, {Integer(3), 3}});
}

TEST_CASE("homology_group") {
    SNFResult in;
    in.rank = 2;
    in.torsion = {Integer(2)};
    const auto g = homology_group(5, in, 1);
    CHECK(g.free_rank == 2);
    CHECK(g.torsion == std::vector<Integer>{2});
    CHECK_THROWS_AS(homology_group(2, in, 1), std::logic_error);
}

TEST_CASE("single vertex and loop") {
    const auto a = make_truncated(2);
    const auto pt = compute_all(gen::empty(1), a);
    CHECK(pt.at(0, 0) == Zfree(1));
    CHECK(pt.at(0, 1) == Zfree(1));
    CHECK(poincare_series(pt).to_string() == Poly2::from_q(Poly::constant(1) + Poly::monomial(1)).to_string());
    CHECK(compute_all(gen::cycle(1), a).groups.empty());
    CHECK(compute_all(Graph(3, {{0, 1}, {1, 2}, {2, 2}}), make_truncated(3)).groups.empty());
}

TEST_CASE("triangle and hexagon over A_2") {
    const auto a = make_truncated(2);
    const auto p3 = compute_all(gen::cycle(3), a);
    CHECK(p3.at(1, 2) == Zmod(2));
    CHECK(p3.at(1, 1) == Zfree(1));
    CHECK(p3.height(1) == AbelianGroup::from_cyclic(1, {Integer(2)}));
    const auto p6 = compute_all(gen::cycle(6), a);
    CHECK(p6.at(2, 4) == Zmod(2));
    CHECK(p6.at(2, 3) == Zfree(1));
    CHECK(p6.at(4, 2) == Zmod(2));
    CHECK(p6.at(4, 1) == Zfree(1));
}

TEST_CASE("forests are torsion-free and concentrated at height 0") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int v = 1 + trial % 6;
        std::vector<Edge> edges;
        for (int x = 1; x < v; ++x)
            if (rng() % 4) edges.push_back({static_cast<int>(rng() % x), x});
        const Graph f(v, edges);
        for (int m : {2, 3}) {
            const auto h = compute_all(f, make_truncated(m));
            CHECK_FALSE(h.has_torsion());
            for (const auto& [ij, g] : h.groups) CHECK(ij.first == 0);
        }
    }
}

TEST_CASE("window mode") {
    const auto w = make_poly_window(5);
    const auto h = compute_all(gen::cycle(3), w);
    for (int j = 1; j <= 5; ++j) CHECK(h.at(1, j) == Zfree(1));
    CHECK(h.at(1, 0).is_zero());
    ComputeOptions opts;
    opts.j_range = std::make_pair(0, 6);
    CHECK_THROWS_AS(compute_all(gen::cycle(3), w, opts), std::out_of_range);
}

TEST_CASE("edge-order invariance") {
    std::mt19937_64 rng(99);
    const auto a = make_truncated(2);
    for (const auto& g : {gen::cycle(5), gen::complete(4), gen::wedge(gen::cycle(3), gen::path(3))}) {
        const auto base = compute_all(g, a).groups;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<std::size_t> order(g.edge_count());
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            CHECK(compute_all(permute_edges(g, order), a).groups == base);
        }
    }
}

TEST_CASE("parallel computation matches sequential") {
    const auto a = make_truncated(3);
    ComputeOptions par;
    par.threads = 3;
    for (const auto& g : {gen::complete(4), gen::cycle(6)}) CHECK(compute_all(g, a, par) == compute_all(g, a));
}

TEST_CASE("memory cap is enforced before allocation") {
    ComputeOptions opts;
    opts.memory_cap_bytes = 1000;
    CHECK_THROWS_AS(compute_all(gen::complete(5), make_truncated(3), opts), ResourceLimitError);
}

TEST_CASE("cokernel oracle") {
    const Poly x = Poly::monomial(1);
    for (int m = 1; m <= 5; ++m) {
        const Poly p = Poly::monomial(m);
        const auto g = cokernel_oracle({p, Poly::monomial(m - 1, m)});
        CHECK(g == AbelianGroup::from_cyclic(static_cast<std::uint64_t>(m - 1), {Integer(m)}));
    }
    // x^2 - b x - a with b = 3, a = 1: |b^2 + 4a| = 13.
    const Poly q = Poly::monomial(2) - Poly::monomial(1, 3) - Poly::constant(1);
    CHECK(cokernel_oracle({q, Poly::monomial(1, 2) - Poly::constant(3)}) == Zmod(13));
    for (int m = 2; m <= 4; ++m) {
        const Poly r = Poly::monomial(m) - Poly::constant(1);
        CHECK(cokernel_oracle({r, Poly::monomial(m, m)}) ==
              AbelianGroup::from_cyclic(0, std::vector<Integer>(m, Integer(m))));
    }
    CHECK_THROWS_AS(cokernel_oracle({Poly::monomial(2, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(cokernel_oracle({Poly::monomial(2)}, 1), std::invalid_argument);
    // A larger bound gives the same group.
    CHECK(cokernel_oracle({q, Poly::monomial(1, 2) - Poly::constant(3)}, 9) == Zmod(13));
}

TEST_CASE("JSON round trip") {
    for (const auto& [g, a] : std::vector<std::pair<Graph, Algebra>>{{gen::complete(4), make_truncated(3)},
                                                                     {gen::cycle(1), make_truncated(2)},
                                                                     {gen::cycle(3), make_poly_window(4)},
                                                                     {gen::cycle(3), make_deformed({-1, 0, 0, 1})}}) {
        const auto h = compute_all(g, a);
        CHECK(homology_from_json(nlohmann::json::parse(homology_to_json(h).dump())) == h);
    }
    auto big = compute_all(gen::cycle(3), make_truncated(2));
    big.groups[{1, 2}].torsion = {Integer("123456789012345678901234567890")};
    CHECK(homology_from_json(homology_to_json(big)) == big);
}
