#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chromhom/chromatic.hpp"
#include "chromhom/theorems.hpp"
#include "oracles.hpp"

using namespace chromhom;

namespace {

// lambda (lambda - 1) ... (lambda - k + 1)
Poly falling(int k) {
    Poly p = Poly::constant(1);
    for (int r = 0; r < k; ++r) p = p * (Poly::monomial(1) - Poly::constant(r));
    return p;
}

}  // namespace

TEST_CASE("small chromatic polynomials") {
    CHECK(chromatic_polynomial(gen::cycle(3)) == falling(3));
    CHECK(chromatic_polynomial(gen::complete(4)) == falling(4));
    CHECK(chromatic_polynomial(gen::cycle(1)).is_zero());
    CHECK(chromatic_polynomial(gen::path(2)) == falling(2));
    CHECK(chromatic_polynomial(gen::empty(3)) == Poly::monomial(3));
    CHECK(chromatic_polynomial(gen::cycle(2)) == falling(2));
    // (l-1)^n + (-1)^n (l-1) for the n-gon.
    const Poly lm1 = Poly::monomial(1) - Poly::constant(1);
    Poly pow = Poly::constant(1);
    for (int n = 1; n <= 7; ++n) {
        pow = pow * lm1;
        const Poly expected = pow + (n % 2 ? Poly() - lm1 : lm1);
        CHECK(chromatic_polynomial(gen::cycle(n)) == expected);
    }
}

TEST_CASE("both algorithms agree and match brute-force colorings") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_multigraph(rng, 6, 9);
        const Poly p = chromatic_polynomial(g);
        CHECK(chromatic_polynomial_dc(g) == p);
        for (int c = 0; c <= 4; ++c) CHECK(p.evaluate(c) == Integer(static_cast<unsigned long>(oracle::proper_colorings(g, c))));
    }
}

TEST_CASE("deletion-contraction identity") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_multigraph(rng, 6, 8);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).is_loop()) continue;
            CHECK(chromatic_polynomial(g) ==
                  chromatic_polynomial(delete_edge(g, e)) - chromatic_polynomial(contract_edge(g, e)));
        }
    }
}

TEST_CASE("euler characteristic matches the chromatic polynomial") {
    std::mt19937_64 rng(29);
    const std::vector<Algebra> algebras = {make_truncated(1), make_truncated(2), make_truncated(3),
                                           make_deformed({-3, -2, 1}), make_poly_window(4)};
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = random_multigraph(rng, 5, 6);
        const auto& a = algebras[trial % algebras.size()];
        const auto check = euler_check(g, a, compute_all(g, a));
        CAPTURE(check.to_string());
        CHECK(check.passed);
        CHECK(check.residuals.empty());
        CHECK(check.homology_side == check.chain_side);
    }
}

TEST_CASE("euler check reports residuals") {
    const auto g = gen::cycle(3);
    const auto a = make_truncated(2);
    auto h = compute_all(g, a);
    h.groups[{0, 3}].free_rank += 2;
    const auto check = euler_check(g, a, h);
    CHECK_FALSE(check.passed);
    CHECK(check.residuals.count(3) == 1);
}
