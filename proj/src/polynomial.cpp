#include "chromhom/polynomial.hpp"

namespace chromhom {

Poly Poly::constant(const Integer& c) { return monomial(0, c); }

Poly Poly::monomial(int exponent, const Integer& c) {
    Poly p;
    p.add_term(exponent, c);
    return p;
}

Integer Poly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

void Poly::add_term(int exponent, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

Poly Poly::truncated(int max_exponent) const {
    Poly out;
    for (const auto& [e, c] : terms_)
        if (e <= max_exponent) out.terms_.emplace(e, c);
    return out;
}

Integer Poly::evaluate(const Integer& x) const {
    Integer acc = 0;
    int prev = degree();
    if (prev < 0) return acc;
    // Horner over the dense range.
    for (int e = prev; e >= 0; --e) acc = acc * x + coeff(e);
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (int e = degree(); e >= 0; --e) {
        acc = acc * inner;
        acc.add_term(0, coeff(e));
    }
    return acc;
}

std::vector<Integer> Poly::dense() const {
    std::vector<Integer> out(static_cast<std::size_t>(degree() + 1), Integer(0));
    for (const auto& [e, c] : terms_)
        if (e >= 0) out[e] = c;
    return out;
}

std::string Poly::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        Integer mag = abs(c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool show_coeff = mag != 1 || e == 0;
        if (show_coeff) out += mag.get_str();
        if (e > 0) {
            out += var;
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

Poly derivative(const Poly& p) {
    Poly out;
    for (const auto& [e, c] : p.terms())
        if (e > 0) out.add_term(e - 1, c * e);
    return out;
}

int rational_gcd_degree(const Poly& a, const Poly& b) {
    using Dense = std::vector<mpq_class>;
    auto to_dense = [](const Poly& p) {
        Dense d;
        for (const auto& c : p.dense()) d.emplace_back(c);
        return d;
    };
    auto trim = [](Dense& d) {
        while (!d.empty() && d.back() == 0) d.pop_back();
    };
    Dense x = to_dense(a), y = to_dense(b);
    trim(x);
    trim(y);
    while (!y.empty()) {
        // x <- x mod y
        while (x.size() >= y.size()) {
            const mpq_class f = x.back() / y.back();
            const std::size_t shift = x.size() - y.size();
            for (std::size_t k = 0; k < y.size(); ++k) x[k + shift] -= f * y[k];
            x.pop_back();
            trim(x);
        }
        std::swap(x, y);
    }
    return static_cast<int>(x.size()) - 1;
}

Integer Poly2::coeff(int ti, int qj) const {
    auto it = terms_.find({ti, qj});
    return it == terms_.end() ? Integer(0) : it->second;
}

void Poly2::add_term(int ti, int qj, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({ti, qj}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

Poly2 Poly2::from_q(const Poly& p, int ti) {
    Poly2 out;
    for (const auto& [e, c] : p.terms()) out.add_term(ti, e, c);
    return out;
}

std::string Poly2::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Integer mag = abs(c);
        std::string mono;
        if (k.first > 0) mono += k.first == 1 ? "t" : "t^" + std::to_string(k.first);
        if (k.second > 0) mono += k.second == 1 ? "q" : "q^" + std::to_string(k.second);
        if (mag != 1 || mono.empty()) out += mag.get_str();
        out += mono;
    }
    return out;
}

}  // namespace chromhom
