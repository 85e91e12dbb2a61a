#pragma once

#include <cstddef>
#include <vector>

#include "chromhom/int_matrix.hpp"
#include "chromhom/integer.hpp"

namespace chromhom {

/// Invariant factors of an integer matrix. Only factors above 1 are stored;
/// the remaining `rank - torsion.size()` factors equal 1.
struct SNFResult {
    std::size_t rank = 0;
    std::vector<Integer> torsion;  // ascending, each divides the next

    /// All nonzero invariant factors d_1 | d_2 | ... | d_rank.
    std::vector<Integer> factors() const;
    friend bool operator==(const SNFResult&, const SNFResult&) = default;
};

struct SNFOptions {
    /// Eliminate with +-1 pivots first (sparse, Markowitz-style). Turning this
    /// off sends the whole matrix through the minimal-pivot diagonalization.
    bool unit_phase = true;
    /// Start in checked 64-bit arithmetic and restart with GMP on overflow.
    bool try_int64 = true;
};

SNFResult smith_normal_form(const IntMatrix& m, const SNFOptions& options = {});

/// Turns the nonzero diagonal of a diagonalized matrix into invariant factors.
std::vector<Integer> invariant_factors_from_diagonal(std::vector<Integer> diagonal);

}  // namespace chromhom
