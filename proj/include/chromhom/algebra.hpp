#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chromhom {

/// Commutative unital Z-algebra, free of finite rank, given by a basis and its
/// structure constants: b_k * b_l = sum_m mult(k, l, m) b_m. Basis element 0 is
/// the unit.
class Algebra {
public:
    Algebra(std::vector<std::string> labels, std::vector<int> degrees,
            std::vector<std::int64_t> structure_constants, bool graded, std::string spec);

    int rank() const { return rank_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int k) const { return degrees_[k]; }
    int max_degree() const;
    bool graded() const { return graded_; }
    /// Set for Z[x] degree windows: results are valid for j <= window only.
    std::optional<int> window() const { return window_; }
    /// The spec string this algebra was built from (e.g. "trunc:2").
    const std::string& spec() const { return spec_; }

    std::int64_t mult(int k, int l, int m) const {
        return mult_[(static_cast<std::size_t>(k) * rank_ + l) * rank_ + m];
    }
    /// Nonzero terms (m, coefficient) of b_k * b_l.
    const std::vector<std::pair<int, std::int64_t>>& product_terms(int k, int l) const {
        return terms_[static_cast<std::size_t>(k) * rank_ + l];
    }

    std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& u,
                                       const std::vector<std::int64_t>& v) const;

    /// Exhaustive unit, commutativity, associativity and grading checks.
    /// Returns an empty string when all hold, otherwise a description.
    std::string validate() const;

    Algebra with_window(int window) const;
    Algebra with_spec(std::string spec) const;

private:
    int rank_;
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::vector<std::int64_t> mult_;
    std::vector<std::vector<std::pair<int, std::int64_t>>> terms_;
    bool graded_;
    std::optional<int> window_;
    std::string spec_;
};

/// Graded dimension: degree -> rank of the homogeneous part.
using QDim = std::map<int, int>;

/// Z[x]/(x^m).
Algebra make_truncated(int m);
/// Z[x]/(p) for a monic p given by coefficients low to high.
Algebra make_deformed(const std::vector<std::int64_t>& coefficients);
/// Z[x] restricted to degrees 0..window; realized as Z[x]/(x^{window+1}).
Algebra make_poly_window(int window);

QDim qdim(const Algebra& a);

/// Parses `trunc:m`, `poly:c0,c1,...,1` and `window:J`.
Algebra parse_algebra_spec(const std::string& spec);

}  // namespace chromhom
