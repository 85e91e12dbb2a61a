#include <doctest.h>

#include <stdexcept>

#include "chromhom/algebra.hpp"

using namespace chromhom;

namespace {

std::vector<std::int64_t> basis_vector(int rank, int k) {
    std::vector<std::int64_t> v(rank, 0);
    v[k] = 1;
    return v;
}

}  // namespace

TEST_CASE("truncated algebras") {
    const auto a2 = make_truncated(2);
    CHECK(a2.rank() == 2);
    CHECK(a2.graded());
    CHECK(a2.multiply({0, 1}, {0, 1}) == std::vector<std::int64_t>{0, 0});
    const auto z = make_truncated(1);
    CHECK(z.rank() == 1);
    CHECK(qdim(z) == QDim{{0, 1}});
    const auto a3 = make_truncated(3);
    CHECK(a3.multiply({0, 1, 0}, {0, 1, 0}) == std::vector<std::int64_t>{0, 0, 1});
    CHECK(a3.multiply({0, 0, 1}, {0, 1, 0}) == std::vector<std::int64_t>{0, 0, 0});
    CHECK_THROWS_AS(make_truncated(0), std::invalid_argument);
}

TEST_CASE("deformed algebras") {
    const auto x2 = make_deformed({0, 0, 1});
    const auto a2 = make_truncated(2);
    CHECK(x2.graded());
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int m = 0; m < 2; ++m) CHECK(x2.mult(k, l, m) == a2.mult(k, l, m));

    // x^2 - b x - a with b = 3, a = 5: x * x = 5 + 3x.
    const auto d = make_deformed({-5, -3, 1});
    CHECK_FALSE(d.graded());
    CHECK(d.multiply({0, 1}, {0, 1}) == std::vector<std::int64_t>{5, 3});
    CHECK(d.degrees() == std::vector<int>{0, 0});

    const auto c = make_deformed({-1, 0, 0, 1});
    CHECK(c.multiply({0, 0, 1}, {0, 1, 0}) == std::vector<std::int64_t>{1, 0, 0});

    CHECK_THROWS_AS(make_deformed({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_deformed({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_deformed({1}), std::invalid_argument);
}

TEST_CASE("non-monic rejection names freeness") {
    try {
        make_deformed({0, 0, 3});
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("free") != std::string::npos);
    }
}

TEST_CASE("polynomial window") {
    const auto w0 = make_poly_window(0);
    CHECK(w0.rank() == 1);
    CHECK(w0.window() == 0);
    const auto w5 = make_poly_window(5);
    CHECK(w5.rank() == 6);
    CHECK(w5.window() == 5);
    CHECK(w5.spec() == "window:5");
}

TEST_CASE("qdim") {
    CHECK(qdim(make_truncated(2)) == QDim{{0, 1}, {1, 1}});
    CHECK(qdim(make_truncated(4)) == QDim{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
    CHECK_THROWS_AS(qdim(make_deformed({-1, 0, 1})), std::invalid_argument);
}

TEST_CASE("unit, commutativity, associativity for every constructor") {
    std::vector<Algebra> all;
    for (int m = 1; m <= 6; ++m) all.push_back(make_truncated(m));
    all.push_back(make_deformed({-3, -2, 1}));
    all.push_back(make_deformed({1, -2, 1}));
    all.push_back(make_deformed({-1, 0, 0, 0, 1}));
    all.push_back(make_deformed({2, -1, 3, 1}));
    all.push_back(make_poly_window(4));
    for (const auto& a : all) {
        CAPTURE(a.spec());
        CHECK(a.validate().empty());
        const int r = a.rank();
        for (int k = 0; k < r; ++k) {
            CHECK(a.multiply(basis_vector(r, 0), basis_vector(r, k)) == basis_vector(r, k));
            for (int l = 0; l < r; ++l) {
                const auto kl = a.multiply(basis_vector(r, k), basis_vector(r, l));
                CHECK(kl == a.multiply(basis_vector(r, l), basis_vector(r, k)));
                for (int m = 0; m < r; ++m)
                    CHECK(a.multiply(kl, basis_vector(r, m)) ==
                          a.multiply(basis_vector(r, k), a.multiply(basis_vector(r, l), basis_vector(r, m))));
                if (a.graded())
                    for (int t = 0; t < r; ++t)
                        if (kl[t]) CHECK(a.degree(t) == a.degree(k) + a.degree(l));
            }
        }
    }
}

TEST_CASE("invalid structure constants are rejected") {
    // b_1 * b_1 = b_0 + b_1 but graded with deg b_1 = 1.
    CHECK_THROWS_AS(Algebra({"1", "x"}, {0, 1}, {1, 0, 0, 1, 0, 1, 1, 1}, true, "bad"), std::invalid_argument);
    // Non-commutative: b_1 b_2 = b_1, b_2 b_1 = 0.
    std::vector<std::int64_t> c(27, 0);
    for (int l = 0; l < 3; ++l) c[(0 * 3 + l) * 3 + l] = c[(l * 3 + 0) * 3 + l] = 1;
    c[(1 * 3 + 2) * 3 + 1] = 1;
    CHECK_THROWS_AS(Algebra({"1", "a", "b"}, {0, 0, 0}, c, false, "bad"), std::invalid_argument);
}

TEST_CASE("algebra spec parsing") {
    CHECK(parse_algebra_spec("trunc:3").rank() == 3);
    CHECK(parse_algebra_spec("poly:-1,0,0,1").rank() == 3);
    CHECK(parse_algebra_spec("window:8").window() == 8);
    CHECK_THROWS_AS(parse_algebra_spec("bogus:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_spec("trunc:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_spec("poly:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_spec("trunc"), std::invalid_argument);
}
