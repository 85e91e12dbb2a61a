#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromhom/algebra.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/integer.hpp"
#include "chromhom/polynomial.hpp"
#include "chromhom/snf.hpp"

namespace chromhom {

/// Finitely generated abelian group Z^free + Z_{d_1} + ... + Z_{d_k} with
/// d_1 | ... | d_k and every d >= 2.
struct AbelianGroup {
    std::uint64_t free_rank = 0;
    std::vector<Integer> torsion;

    /// Canonical form from an arbitrary list of cyclic orders (1s and 0s are
    /// dropped, the rest recombined into invariant factors).
    static AbelianGroup from_cyclic(std::uint64_t free_rank, std::vector<Integer> orders);

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool has_torsion() const { return !torsion.empty(); }
    /// True iff the group has an element of order k.
    bool has_element_of_order(const Integer& k) const;
    AbelianGroup& operator+=(const AbelianGroup& o);  // direct sum
    std::string to_string() const;
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Prime-power decomposition of the torsion part: (p^e, multiplicity).
std::vector<std::pair<Integer, int>> primary_decomposition(const AbelianGroup& g);

using Bidegree = std::pair<int, int>;

/// H^{i,j} for a graph and algebra. Only nonzero groups are stored. For
/// ungraded algebras every group sits at j = 0.
struct BigradedHomology {
    std::map<Bidegree, AbelianGroup> groups;
    std::string algebra;
    std::string graph;
    std::optional<int> window;
    bool graded = true;
    int j_min = 0;
    int j_max = 0;

    AbelianGroup at(int i, int j) const;
    /// Direct sum over all degrees at height i.
    AbelianGroup height(int i) const;
    bool has_torsion() const;
    friend bool operator==(const BigradedHomology&, const BigradedHomology&) = default;
};

struct ComputeOptions {
    std::optional<std::pair<int, int>> j_range;  // inclusive
    int threads = 1;
    std::uint64_t memory_cap_bytes = std::uint64_t{4} << 30;
};

/// Raised before any large allocation when the estimated footprint exceeds
/// the configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// free = dim - rank(d_out) - rank(d_in); torsion = nontrivial factors of d_in.
AbelianGroup homology_group(std::uint64_t dim, const SNFResult& d_in, std::size_t d_out_rank);

std::uint64_t estimate_memory(const Graph& g, const Algebra& a, int threads);

BigradedHomology compute_all(const Graph& g, const Algebra& a, const ComputeOptions& options = {});

/// sum_{i,j} t^i q^j free_rank(H^{i,j}).
Poly2 poincare_series(const BigradedHomology& h);

/// Z[x]/(g_1, ..., g_k) as an abelian group, computed as the cokernel of the
/// matrix whose columns are x^t g_s written in the monomials below the bound.
/// One generator must be monic. Without a bound, the smallest sufficient one
/// is used.
AbelianGroup cokernel_oracle(const std::vector<Poly>& generators,
                             std::optional<int> degree_bound = std::nullopt);

}  // namespace chromhom
