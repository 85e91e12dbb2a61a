#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chromhom/integer.hpp"

namespace chromhom {

/// Univariate integer polynomial, exponent -> coefficient; zero coefficients
/// are never stored.
class Poly {
public:
    Poly() = default;
    static Poly constant(const Integer& c);
    static Poly monomial(int exponent, const Integer& c = 1);

    const std::map<int, Integer>& terms() const { return terms_; }
    Integer coeff(int exponent) const;
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial

    void add_term(int exponent, const Integer& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Drops all terms of exponent above `max_exponent`.
    Poly truncated(int max_exponent) const;
    Integer evaluate(const Integer& x) const;
    /// this(inner), i.e. polynomial composition.
    Poly compose(const Poly& inner) const;

    /// Dense coefficient list, low to high (empty for the zero polynomial).
    std::vector<Integer> dense() const;
    std::string to_string(char var = 'x') const;

private:
    std::map<int, Integer> terms_;
};

Poly derivative(const Poly& p);
/// Degree of gcd(a, b) over Q; -1 when both are zero.
int rational_gcd_degree(const Poly& a, const Poly& b);

/// Bivariate polynomial in t and q, keyed by (t exponent, q exponent).
class Poly2 {
public:
    const std::map<std::pair<int, int>, Integer>& terms() const { return terms_; }
    Integer coeff(int ti, int qj) const;
    void add_term(int ti, int qj, const Integer& c);
    Poly2& operator+=(const Poly2& o);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    /// Embeds a polynomial in q multiplied by t^ti.
    static Poly2 from_q(const Poly& p, int ti = 0);
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, Integer> terms_;
};

}  // namespace chromhom
