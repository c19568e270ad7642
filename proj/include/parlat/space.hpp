// Symbolic lattice of concrete function-space families:
//
//   Chain    Lp(e)    -- the L^p chain on [0,1], indexed by one decorated
//                        exponent, totally ordered by inclusion.
//   Square   L(p,q)   -- L^p ^ L^q (intersection, p >= q) or L^p v L^q
//                        (sum, p <= q) on the real line; ordered by
//                        L(p,q) <= L(p',q') iff p >= p' and q <= q'.
//   Amalgam  W(p,q)   -- functions locally L^p whose unit-cell norms form
//                        an l^q sequence; same index order as Square.
//
// Meets, joins, duals and the two multiplier maps (pointwise product and
// convolution) are computed exactly on the decorated-exponent coordinates.
// Operations never mix variants; mixing raises VariantError.
#pragma once

#include "parlat/exponent.hpp"

#include <stdexcept>
#include <string>

namespace parlat {

enum class SpaceKind { Chain, Square, Amalgam };

struct VariantError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Which space sits at the open top of the multiplier chain: L^inf itself or
// the slightly smaller omega space (top row excluded). Both modes share all
// code paths; the flag only changes the top index written by the multiplier
// maps on Square points.
enum class TopMode { Infinity, Omega };

inline EnrichedExponent top_exponent(TopMode mode) {
    return mode == TopMode::Infinity ? EnrichedExponent::infinity()
                                     : EnrichedExponent::omega();
}

struct SpacePoint {
    SpaceKind kind = SpaceKind::Chain;
    EnrichedExponent local;   // Chain: the exponent; Square: p; Amalgam: the L^p part
    EnrichedExponent global;  // Square: q; Amalgam: the l^q part; unused for Chain

    static SpacePoint chain(EnrichedExponent e) {
        return {SpaceKind::Chain, e, e};
    }
    static SpacePoint square(EnrichedExponent p, EnrichedExponent q) {
        return {SpaceKind::Square, p, q};
    }
    static SpacePoint amalgam(EnrichedExponent p, EnrichedExponent q) {
        return {SpaceKind::Amalgam, p, q};
    }

    bool operator==(const SpacePoint&) const = default;
};

// J(f) = [1, p] (closed) or [1, p) (half-open): the exponent interval a
// single function on [0,1] belongs to. sup_p is stored as an Exponent.
struct MembershipInterval {
    Exponent sup_p;
    bool closed_at_sup = true;

    MembershipInterval() = default;
    MembershipInterval(Exponent sup, bool closed) : sup_p(sup), closed_at_sup(closed) {}
    bool operator==(const MembershipInterval&) const = default;
};

bool space_leq(const SpacePoint& a, const SpacePoint& b);
SpacePoint space_meet(const SpacePoint& a, const SpacePoint& b);
SpacePoint space_join(const SpacePoint& a, const SpacePoint& b);

// Componentwise decorated conjugation. For Square points this is the
// point reflection through the center (the L^2 corner of the diagonal).
SpacePoint space_dual(const SpacePoint& a);

// True when the formal dual is not an honest reflexive duality: some
// coordinate sits at an undecorated endpoint p = 1 or p = inf.
bool dual_nonreflexive(const SpacePoint& a);

// Pointwise-multiplication multiplier space M(a).
//   Chain:   M Lp(e)  = Lp(dual e)        (p <-> conj p, +/- swapped)
//   Square:  M L(p,q) = L(conj p ^ conj q, top); a point already on the
//            multiplier chain (global == top) maps to (conj p, top), the
//            matching-pair rule of that chain.
//   Amalgam: M W(p,q) = W(conj p, inf) for every q.
SpacePoint mult_multiplier(const SpacePoint& a, TopMode mode = TopMode::Infinity);

// Convolution multiplier space M*(a): Square L(p,q) -> L(1, conj p ^ conj q),
// Amalgam W(p,q) -> W(1, conj p ^ conj q). Not defined on the [0,1] chain.
SpacePoint conv_multiplier(const SpacePoint& a);

// mult_multiplier applied twice; lands on (p v q, top) of the multiplier chain.
SpacePoint iterated_multiplier_check(const SpacePoint& a, TopMode mode = TopMode::Infinity);

// Whether every element of a multiplies every element of b (same variant).
// Uses the generating-chain characterization: there must be one exponent r
// with a inside the r-member and b inside the conj(r)-member, which reduces
// to a.local <= dual(b.local) in inclusion order. Symmetric in (a, b).
bool is_multiplicable(const SpacePoint& a, const SpacePoint& b);

// Multiplier space of a single element with membership interval j:
// closed [1,p] -> Lp(conj p); half-open [1,p) -> Lp(conj p, +).
SpacePoint element_multiplier(const MembershipInterval& j);

// Text forms: "Lp(3-)", "L(3,inf)", "W(3,5)". Lossless round-trip.
std::string format_space(const SpacePoint& a);

}  // namespace parlat
