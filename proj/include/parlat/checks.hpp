// Numerical verification of the norm inequalities tying the symbolic
// lattice to actual functions: pointwise-product and convolution bounds,
// the module inequality ||ab|| <= ||a||_LM ||b||_M, duality pairings, and
// the membership classification of the power-log family.
#pragma once

#include "parlat/grid.hpp"
#include "parlat/space.hpp"

#include <string>
#include <vector>

namespace parlat {

struct InequalityReport {
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    double ratio() const { return rhs == 0.0 ? (lhs == 0.0 ? 1.0 : HUGE_VAL) : lhs / rhs; }
};

inline constexpr double kIdentitySlack = 1e-12;   // pure floating-point identities
inline constexpr double kAccumulationSlack = 1e-9;  // convolution / split rounding

// ||f g||_1 <= ||f||_p ||g||_conj(p) on a shared grid.
InequalityReport check_holder(const GridFunction& f, const GridFunction& g,
                              const Exponent& e);

// ||f * g||_r <= ||f||_p ||g||_q with 1/r = 1/p + 1/q - 1. Requires both
// supports inside the central half of the window and 1/p + 1/q >= 1.
InequalityReport check_young(const GridFunction& f, const GridFunction& g,
                             const Exponent& ep, const Exponent& eq);

// ||f g||_1 <= ||f||_{p,q} ||g||_{conj p, conj q} in amalgam norms.
InequalityReport check_amalgam_holder(const GridFunction& f, const GridFunction& g,
                                      const EnrichedExponent& p,
                                      const EnrichedExponent& q);

// Norm of f in a concrete space: plain p-norm on the chain and the square
// diagonal, projective above the diagonal, inductive below, amalgam norms
// for W points. Only undecorated (Exact) coordinates have a norm.
double space_norm(const GridFunction& f, const SpacePoint& space);

// The module inequality ||a b|| <= ||a||_LM ||b||_M for b in the space m,
// a in its multiplier space, product measured in the ambient norm
// (L^1 on the chain, the bottom-corner inductive norm on the square,
// W(1,inf) for amalgams).
InequalityReport check_banach_inequality(const GridFunction& a, const GridFunction& b,
                                         const SpacePoint& m);

// |<f, g>| <= ||f||_space ||g||_dual(space).
InequalityReport dual_pairing_check(const GridFunction& f, const GridFunction& g,
                                    const SpacePoint& space);

// Analytic membership interval J(f) = [1, 1/alpha] or [1, 1/alpha) of the
// power-log family; closed iff beta/alpha > 1 (alpha = 0 gives [1, inf]).
// Throws std::domain_error when the family is not even in L^1.
MembershipInterval membership_set(const PowerLogFamily& fam);

// Numerical divergence oracle: samples the family at resolutions
// 2^8 .. 2^14 and classifies the p-norm as divergent when the last
// refinement still grows by more than 1.5%.
bool membership_refinement_divergent(const PowerLogFamily& fam, const Exponent& p);

}  // namespace parlat
