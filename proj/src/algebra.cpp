#include "chromhom/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace chromhom {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("structure constant overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("structure constant overflow");
    return r;
}

std::vector<std::string> power_labels(int m) {
    std::vector<std::string> labels;
    for (int k = 0; k < m; ++k)
        labels.push_back(k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k));
    return labels;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

}  // namespace

Algebra::Algebra(std::vector<std::string> labels, std::vector<int> degrees,
                 std::vector<std::int64_t> structure_constants, bool graded, std::string spec)
    : rank_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      degrees_(std::move(degrees)),
      mult_(std::move(structure_constants)),
      graded_(graded),
      spec_(std::move(spec)) {
    if (rank_ < 1) throw std::invalid_argument("algebra rank must be positive");
    if (rank_ > 255) throw std::invalid_argument("algebra rank above 255 is not supported");
    const auto r = static_cast<std::size_t>(rank_);
    if (degrees_.size() != r || mult_.size() != r * r * r)
        throw std::invalid_argument("algebra data has inconsistent sizes");
    if (degrees_[0] != 0) throw std::invalid_argument("the unit must have degree 0");
    for (int d : degrees_)
        if (d < 0) throw std::invalid_argument("negative basis degree");
    terms_.resize(r * r);
    for (int k = 0; k < rank_; ++k)
        for (int l = 0; l < rank_; ++l)
            for (int m = 0; m < rank_; ++m)
                if (auto c = mult(k, l, m)) terms_[k * r + l].emplace_back(m, c);
    if (auto err = validate(); !err.empty()) throw std::invalid_argument(err);
}

int Algebra::max_degree() const {
    int d = 0;
    for (int x : degrees_) d = std::max(d, x);
    return d;
}

std::vector<std::int64_t> Algebra::multiply(const std::vector<std::int64_t>& u,
                                            const std::vector<std::int64_t>& v) const {
    if (u.size() != static_cast<std::size_t>(rank_) || v.size() != u.size())
        throw std::invalid_argument("coefficient vector length must equal the algebra rank");
    std::vector<std::int64_t> out(u.size(), 0);
    for (int k = 0; k < rank_; ++k) {
        if (!u[k]) continue;
        for (int l = 0; l < rank_; ++l) {
            if (!v[l]) continue;
            const auto uv = checked_mul(u[k], v[l]);
            for (auto [m, c] : product_terms(k, l)) out[m] = checked_add(out[m], checked_mul(uv, c));
        }
    }
    return out;
}

std::string Algebra::validate() const {
    std::ostringstream err;
    for (int l = 0; l < rank_; ++l)
        for (int m = 0; m < rank_; ++m)
            if (mult(0, l, m) != (l == m ? 1 : 0)) {
                err << "basis element 0 is not a unit (1*b_" << l << ")";
                return err.str();
            }
    for (int k = 0; k < rank_; ++k)
        for (int l = 0; l < rank_; ++l)
            for (int m = 0; m < rank_; ++m) {
                if (mult(k, l, m) != mult(l, k, m)) {
                    err << "not commutative at b_" << k << "*b_" << l;
                    return err.str();
                }
                if (graded_ && mult(k, l, m) != 0 && degrees_[m] != degrees_[k] + degrees_[l]) {
                    err << "grading violated by b_" << k << "*b_" << l;
                    return err.str();
                }
            }
    for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b)
            for (int c = 0; c < rank_; ++c) {
                std::vector<std::int64_t> ea(rank_, 0), eb(rank_, 0), ec(rank_, 0);
                ea[a] = eb[b] = ec[c] = 1;
                if (multiply(multiply(ea, eb), ec) != multiply(ea, multiply(eb, ec))) {
                    err << "not associative at (b_" << a << ",b_" << b << ",b_" << c << ")";
                    return err.str();
                }
            }
    return {};
}

Algebra Algebra::with_spec(std::string spec) const {
    Algebra copy = *this;
    copy.spec_ = std::move(spec);
    return copy;
}

Algebra Algebra::with_window(int window) const {
    Algebra copy = *this;
    copy.window_ = window;
    return copy;
}

Algebra make_truncated(int m) {
    if (m < 1) throw std::invalid_argument("truncated algebra needs m >= 1");
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(m) + 1, 0);
    coeffs[m] = 1;
    return make_deformed(coeffs).with_spec("trunc:" + std::to_string(m));
}

Algebra make_deformed(const std::vector<std::int64_t>& coefficients) {
    if (coefficients.size() < 2) throw std::invalid_argument("polynomial must have degree >= 1");
    if (coefficients.back() != 1)
        throw std::invalid_argument(
            "polynomial must be monic: otherwise Z[x]/(p) is not a free Z-module of finite rank");
    const int m = static_cast<int>(coefficients.size()) - 1;
    bool graded = true;
    for (int k = 0; k < m; ++k) graded = graded && coefficients[k] == 0;

    // reduced[k] = x^k mod p for k < 2m - 1.
    std::vector<std::vector<std::int64_t>> reduced;
    for (int k = 0; k < 2 * m - 1; ++k) {
        std::vector<std::int64_t> v(m, 0);
        if (k < m) {
            v[k] = 1;
        } else {
            const auto& prev = reduced[k - 1];
            // x * prev, then replace x^m by -(c_0 + ... + c_{m-1} x^{m-1}).
            const auto top = prev[m - 1];
            for (int i = m - 1; i > 0; --i) v[i] = prev[i - 1];
            v[0] = 0;
            for (int i = 0; i < m; ++i) v[i] = checked_add(v[i], checked_mul(-top, coefficients[i]));
        }
        reduced.push_back(std::move(v));
    }
    std::vector<std::int64_t> consts;
    consts.reserve(static_cast<std::size_t>(m) * m * m);
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            for (int n = 0; n < m; ++n) consts.push_back(reduced[k + l][n]);

    std::vector<int> degrees(m, 0);
    if (graded)
        for (int k = 0; k < m; ++k) degrees[k] = k;

    std::string spec = "poly:";
    for (std::size_t k = 0; k < coefficients.size(); ++k)
        spec += (k ? "," : "") + std::to_string(coefficients[k]);
    return Algebra(power_labels(m), std::move(degrees), std::move(consts), graded, spec);
}

Algebra make_poly_window(int window) {
    if (window < 0) throw std::invalid_argument("window must be >= 0");
    return make_truncated(window + 1).with_spec("window:" + std::to_string(window)).with_window(window);
}

QDim qdim(const Algebra& a) {
    if (!a.graded()) throw std::invalid_argument("qdim requires a graded algebra");
    QDim q;
    for (int d : a.degrees()) ++q[d];
    return q;
}

Algebra parse_algebra_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown algebra spec '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string body = spec.substr(colon + 1);
    try {
        if (kind == "trunc") {
            auto v = parse_int_list(body);
            if (v.size() != 1) throw std::invalid_argument("expected trunc:m");
            return make_truncated(v[0]);
        }
        if (kind == "window") {
            auto v = parse_int_list(body);
            if (v.size() != 1) throw std::invalid_argument("expected window:J");
            return make_poly_window(v[0]);
        }
        if (kind == "poly") {
            auto v = parse_int_list(body);
            return make_deformed(std::vector<std::int64_t>(v.begin(), v.end()));
        }
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("bad algebra spec '" + spec + "': " + e.what());
    }
    throw std::invalid_argument("unknown algebra spec '" + spec + "'");
}

}  // namespace chromhom
