// Polarity maps L/R of a finite compatibility relation, their closures, the
// complete lattices of closed sets, matching pairs, generating families and
// the tightness test. Everything is exhaustive over bitmask subsets.
#pragma once

#include "parlat/relation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parlat {

enum class Side { Left, Right };

// L(s) = { x : (x,y) compatible for all y in s }; L(empty) = full carrier.
Subset left_mult(const FiniteRelationAlgebra& a, Subset s);
// R(s) = { y : (x,y) compatible for all x in s }.
Subset right_mult(const FiniteRelationAlgebra& a, Subset s);

Subset lr_closure(const FiniteRelationAlgebra& a, Subset s);  // L(R(s))
Subset rl_closure(const FiniteRelationAlgebra& a, Subset s);  // R(L(s))

struct ClosedFamily {
    Side side = Side::Left;
    std::vector<Subset> sets;  // sorted by (popcount, value); includes top and bottom

    bool contains(Subset s) const;
};

// All LR-closed (side Left) / RL-closed (side Right) subsets, computed as
// the meet-closure of the generator polars of singletons. Carrier capped at
// 20 elements; throws std::invalid_argument above that.
ClosedFamily closed_family(const FiniteRelationAlgebra& a, Side side);

// Same family via the 2^n power-set scan; the independent oracle.
ClosedFamily closed_family_powerset(const FiniteRelationAlgebra& a, Side side);

struct LawCheck {
    std::string name;
    bool pass = true;
    std::string counterexample;  // empty when pass
};

struct GaloisLawReport {
    std::vector<LawCheck> checks;
    bool pass = true;
};

// Exhaustively verifies, over all subsets and all pairs of closed sets:
// extensivity S <= LR(S), LRL = L, RLR = R, anti-isomorphism
// L(M ^ N) = LM v LN (and mirrored), bijectivity of L/R between the two
// closed families, and the involution isomorphism F^L <-> F^R.
GaloisLawReport verify_galois_laws(const FiniteRelationAlgebra& a);

// All pairs (N in F^L, M in F^R) with N = L(M) and M = R(N), plus the
// exhaustive check that the relation is reconstructed by the pairs:
// (x,y) compatible iff some pair has x in N and y in M.
struct MatchingPairs {
    std::vector<std::pair<Subset, Subset>> pairs;
    bool reconstructs = true;
};
MatchingPairs matching_pairs(const FiniteRelationAlgebra& a);

// A family of side-closed sets generates the relation when it contains the
// universal multiplier set and the carrier, and witnesses every compatible
// pair. Throws if a member is not closed on the given side.
bool is_generating(const FiniteRelationAlgebra& a, const std::vector<Subset>& fam,
                   Side side);

struct TightnessMember {
    Subset set = 0;
    bool dense = false;  // reachable from the universal multipliers
};

struct TightnessReport {
    Subset universal = 0;         // R(carrier) for side Right
    std::vector<Subset> reached;  // orbit of the universal set under L and R
    std::vector<TightnessMember> members;
    bool tight = true;
};

// Finite surrogate of the density condition for a generating family on the
// right side. Density of the universal right multipliers in a member M
// degenerates, on a finite carrier, to M being *reachable* from them: M must
// lie in the orbit of R(carrier) under the two polarity maps. A member
// outside the orbit (e.g. an intermediate step of a strict multiplier chain)
// is a density failure and the algebra is reported non-tight.
// Requires fam to be generating (throws otherwise).
TightnessReport tightness_check(const FiniteRelationAlgebra& a,
                                const std::vector<Subset>& fam);

// Subsets as element lists, for reports.
std::vector<int> subset_elements(Subset s);
std::string format_subset(Subset s);

}  // namespace parlat
