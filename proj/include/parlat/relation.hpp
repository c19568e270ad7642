// Finite carrier with involution and compatibility relation: the substrate
// for brute-force multiplier/closure computations. Subsets of the carrier
// are bitmasks; element i is bit (1 << i).
#pragma once

#include <cstdint>
#include <vector>

namespace parlat {

using Subset = std::uint32_t;

constexpr int kMaxCarrier = 24;

struct FiniteRelationAlgebra {
    int n = 0;
    std::vector<int> involution;        // permutation on {0..n-1}, involutive
    std::vector<Subset> gamma_rows;     // gamma_rows[x] = { y : (x,y) compatible }
    std::vector<Subset> gamma_cols;     // gamma_cols[y] = { x : (x,y) compatible }
    int unit = 0;

    // Validates: involution is an involutive permutation; (x,y) in gamma
    // implies (inv y, inv x) in gamma; the unit is a fixed point of the
    // involution and compatible with everything on both sides.
    // Throws std::invalid_argument on any violation.
    FiniteRelationAlgebra(int n, std::vector<int> involution,
                          const std::vector<std::vector<int>>& gamma, int unit);

    Subset full() const { return n == 32 ? ~Subset(0) : ((Subset(1) << n) - 1); }
    bool gamma(int x, int y) const { return gamma_rows[x] >> y & 1; }
    Subset star(Subset s) const;  // elementwise involution image
};

// Degree-cutoff algebra: carrier = degrees {0..n}, identity involution,
// (i,j) compatible iff i + j <= n, unit = degree 0. The multiplier sets
// form the strictly increasing chain of degree-truncation subspaces.
FiniteRelationAlgebra degree_truncation_algebra(int n);

// Two-tier quasi-algebra model: a marked core of the first `core` elements
// multiplies everything; products of two non-core elements are undefined.
FiniteRelationAlgebra quasi_algebra(int n, int core);

// Everything multiplies everything.
FiniteRelationAlgebra total_algebra(int n);

}  // namespace parlat
