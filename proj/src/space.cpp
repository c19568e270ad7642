#include "parlat/space.hpp"

namespace parlat {

namespace {

void require_same_kind(const SpacePoint& a, const SpacePoint& b, const char* op) {
    if (a.kind != b.kind)
        throw VariantError(std::string(op) + ": operands are different space variants");
}

}  // namespace

bool space_leq(const SpacePoint& a, const SpacePoint& b) {
    require_same_kind(a, b, "space_leq");
    if (a.kind == SpaceKind::Chain) return enriched_leq(a.local, b.local);
    // p >= p' and q <= q'; in reciprocal coordinates the first is
    // t_p <= t_p', i.e. the plain inclusion order on each axis.
    return enriched_leq(a.local, b.local) && enriched_leq(b.global, a.global);
}

SpacePoint space_meet(const SpacePoint& a, const SpacePoint& b) {
    require_same_kind(a, b, "space_meet");
    if (a.kind == SpaceKind::Chain)
        return SpacePoint::chain(chain_min(a.local, b.local));
    // (p,q) ^ (p',q') = (p v p', q ^ q'): inclusion-min local, inclusion-max global.
    return {a.kind, chain_min(a.local, b.local), chain_max(a.global, b.global)};
}

SpacePoint space_join(const SpacePoint& a, const SpacePoint& b) {
    require_same_kind(a, b, "space_join");
    if (a.kind == SpaceKind::Chain)
        return SpacePoint::chain(chain_max(a.local, b.local));
    return {a.kind, chain_max(a.local, b.local), chain_min(a.global, b.global)};
}

SpacePoint space_dual(const SpacePoint& a) {
    if (a.kind == SpaceKind::Chain)
        return SpacePoint::chain(enriched_dual(a.local));
    return {a.kind, enriched_dual(a.local), enriched_dual(a.global)};
}

bool dual_nonreflexive(const SpacePoint& a) {
    auto extreme = [](const EnrichedExponent& e) {
        return (e.base.t() == Rational(0) || e.base.t() == Rational(1)) &&
               e.dec == Decoration::Exact;
    };
    if (a.kind == SpaceKind::Chain) return extreme(a.local);
    return extreme(a.local) || extreme(a.global);
}

SpacePoint mult_multiplier(const SpacePoint& a, TopMode mode) {
    switch (a.kind) {
        case SpaceKind::Chain:
            return SpacePoint::chain(enriched_dual(a.local));
        case SpaceKind::Amalgam:
            // local conjugate, l^inf globally, independent of q.
            return SpacePoint::amalgam(enriched_dual(a.local), EnrichedExponent::infinity());
        case SpaceKind::Square: {
            const EnrichedExponent top = top_exponent(mode);
            if (a.global == top)  // multiplier-chain member: matching pair
                return SpacePoint::square(enriched_dual(a.local), top);
            return SpacePoint::square(
                p_min(enriched_dual(a.local), enriched_dual(a.global)), top);
        }
    }
    throw std::logic_error("unreachable");
}

SpacePoint conv_multiplier(const SpacePoint& a) {
    if (a.kind == SpaceKind::Chain)
        throw VariantError("conv_multiplier: convolution is not defined on the [0,1] chain");
    const EnrichedExponent tail = p_min(enriched_dual(a.local), enriched_dual(a.global));
    if (a.kind == SpaceKind::Square)
        return SpacePoint::square(EnrichedExponent::from_p(Rational(1)), tail);
    return SpacePoint::amalgam(EnrichedExponent::from_p(Rational(1)), tail);
}

SpacePoint iterated_multiplier_check(const SpacePoint& a, TopMode mode) {
    return mult_multiplier(mult_multiplier(a, mode), mode);
}

bool is_multiplicable(const SpacePoint& a, const SpacePoint& b) {
    require_same_kind(a, b, "is_multiplicable");
    const bool fwd = enriched_leq(a.local, enriched_dual(b.local));
    const bool bwd = enriched_leq(b.local, enriched_dual(a.local));
    if (fwd != bwd) throw std::logic_error("is_multiplicable: symmetry violated");
    return fwd;
}

SpacePoint element_multiplier(const MembershipInterval& j) {
    const Exponent pbar = conjugate(j.sup_p);
    return SpacePoint::chain(
        {pbar, j.closed_at_sup ? Decoration::Exact : Decoration::Plus});
}

std::string format_space(const SpacePoint& a) {
    switch (a.kind) {
        case SpaceKind::Chain:
            return "Lp(" + format_exponent(a.local) + ")";
        case SpaceKind::Square:
            return "L(" + format_exponent(a.local) + "," + format_exponent(a.global) + ")";
        case SpaceKind::Amalgam:
            return "W(" + format_exponent(a.local) + "," + format_exponent(a.global) + ")";
    }
    throw std::logic_error("unreachable");
}

}  // namespace parlat
