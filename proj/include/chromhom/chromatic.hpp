#pragma once

#include <map>
#include <string>

#include "chromhom/algebra.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/homology.hpp"
#include "chromhom/polynomial.hpp"

namespace chromhom {

/// Chromatic polynomial in lambda by the subset expansion
/// sum_{s subset E} (-1)^{|s|} lambda^{c(s)}.
Poly chromatic_polynomial(const Graph& g);

/// Same polynomial by deletion-contraction, memoized on normalized graphs.
Poly chromatic_polynomial_dc(const Graph& g);

struct EulerCheck {
    bool passed = true;
    Poly homology_side;  // sum (-1)^i q^j rank H^{i,j}
    Poly chain_side;     // sum (-1)^i q^j dim C^{i,j}
    Poly chromatic_side; // P_G(qdim A), truncated to the computed degrees
    /// Degree -> (homology, chromatic) coefficient where either side disagrees.
    std::map<int, std::pair<Integer, Integer>> residuals;
    std::string to_string() const;
};

/// Compares the graded Euler characteristic of `h` with P_G(qdim A) degree by
/// degree over [h.j_min, h.j_max]. For ungraded algebras q is set to 1.
EulerCheck euler_check(const Graph& g, const Algebra& a, const BigradedHomology& h);

}  // namespace chromhom
