#include "parlat/checks.hpp"

#include <cmath>
#include <stdexcept>

namespace parlat {

namespace {

void require_exact(const EnrichedExponent& e, const char* what) {
    if (e.dec != Decoration::Exact)
        throw std::invalid_argument(std::string(what) +
                                    ": decorated exponents have no numeric norm");
}

bool central_half_supported(const GridFunction& f) {
    if (f.domain != Domain::RealWindow) return false;
    const double half = 0.5 * f.halfwidth;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (std::abs(f.values[i]) != 0.0 && std::abs(f.x_at(i)) > half) return false;
    return true;
}

}  // namespace

InequalityReport check_holder(const GridFunction& f, const GridFunction& g,
                              const Exponent& e) {
    if (!f.same_grid(g)) throw std::invalid_argument("check_holder: grids do not match");
    InequalityReport r;
    r.check = "holder p=" + format_exponent(e);
    r.lhs = lp_norm(pointwise_product(f, g), Exponent::one());
    r.rhs = lp_norm(f, e) * lp_norm(g, conjugate(e));
    r.pass = r.lhs <= r.rhs * (1.0 + kIdentitySlack);
    return r;
}

InequalityReport check_young(const GridFunction& f, const GridFunction& g,
                             const Exponent& ep, const Exponent& eq) {
    if (!f.same_grid(g)) throw std::invalid_argument("check_young: grids do not match");
    if (!central_half_supported(f) || !central_half_supported(g))
        throw std::invalid_argument(
            "check_young: inputs must be supported in the central half of the window");
    const Rational sum = ep.t() + eq.t();
    if (sum < Rational(1))
        throw std::invalid_argument("check_young: needs 1/p + 1/q >= 1");
    const Exponent er(sum - Rational(1));  // 1/r = 1/p + 1/q - 1
    InequalityReport r;
    r.check = "young p=" + format_exponent(ep) + " q=" + format_exponent(eq) +
              " r=" + format_exponent(er);
    r.lhs = lp_norm(convolution(f, g), f.cell_width(), er);
    r.rhs = lp_norm(f, ep) * lp_norm(g, eq);
    r.pass = r.lhs <= r.rhs * (1.0 + kAccumulationSlack);
    return r;
}

InequalityReport check_amalgam_holder(const GridFunction& f, const GridFunction& g,
                                      const EnrichedExponent& p,
                                      const EnrichedExponent& q) {
    require_exact(p, "check_amalgam_holder");
    require_exact(q, "check_amalgam_holder");
    InequalityReport r;
    r.check = "amalgam holder p=" + format_exponent(p) + " q=" + format_exponent(q);
    r.lhs = lp_norm(pointwise_product(f, g), Exponent::one());
    r.rhs = amalgam_norm(f, p.base, q.base) *
            amalgam_norm(g, conjugate(p.base), conjugate(q.base));
    r.pass = r.lhs <= r.rhs * (1.0 + kAccumulationSlack);
    return r;
}

double space_norm(const GridFunction& f, const SpacePoint& space) {
    require_exact(space.local, "space_norm");
    if (space.kind != SpaceKind::Chain) require_exact(space.global, "space_norm");
    switch (space.kind) {
        case SpaceKind::Chain:
            return lp_norm(f, space.local.base);
        case SpaceKind::Square: {
            const auto cmp = enriched_compare(space.local, space.global);
            if (cmp == 0) return lp_norm(f, space.local.base);
            // p > q (t_p < t_q): intersection, projective norm; p < q: sum.
            if (cmp < 0) return projective_norm(f, space.local.base, space.global.base);
            return inductive_norm(f, space.local.base, space.global.base).value;
        }
        case SpaceKind::Amalgam:
            return amalgam_norm(f, space.local.base, space.global.base);
    }
    throw std::logic_error("unreachable");
}

InequalityReport check_banach_inequality(const GridFunction& a, const GridFunction& b,
                                         const SpacePoint& m) {
    const SpacePoint lm = mult_multiplier(m);
    const GridFunction ab = pointwise_product(a, b);
    InequalityReport r;
    r.check = "banach b in " + format_space(m) + ", a in " + format_space(lm);
    switch (m.kind) {
        case SpaceKind::Chain:
            r.lhs = lp_norm(ab, Exponent::one());
            break;
        case SpaceKind::Square:
            r.lhs = inductive_norm(ab, Exponent::one(), Exponent::infinity()).value;
            break;
        case SpaceKind::Amalgam:
            r.lhs = amalgam_norm(ab, Exponent::one(), Exponent::infinity());
            break;
    }
    r.rhs = space_norm(a, lm) * space_norm(b, m);
    r.pass = r.lhs <= r.rhs * (1.0 + kAccumulationSlack);
    return r;
}

InequalityReport dual_pairing_check(const GridFunction& f, const GridFunction& g,
                                    const SpacePoint& space) {
    if (!f.same_grid(g))
        throw std::invalid_argument("dual_pairing_check: grids do not match");
    std::complex<double> pairing = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        pairing += f.values[i] * std::conj(g.values[i]);
    pairing *= f.cell_width();
    InequalityReport r;
    r.check = "pairing on " + format_space(space);
    r.lhs = std::abs(pairing);
    r.rhs = space_norm(f, space) * space_norm(g, space_dual(space));
    r.pass = r.lhs <= r.rhs * (1.0 + kAccumulationSlack);
    return r;
}

MembershipInterval membership_set(const PowerLogFamily& fam) {
    if (fam.alpha == Rational(0))
        return MembershipInterval(Exponent::infinity(), true);
    if (fam.alpha > Rational(1))
        throw std::domain_error("membership_set: family is not in L^1");
    // sup J(f) = 1/alpha, i.e. reciprocal t = alpha.
    const Exponent sup(fam.alpha);
    const bool closed = fam.beta / fam.alpha > Rational(1);
    if (fam.alpha == Rational(1) && !closed)
        throw std::domain_error("membership_set: family is not in L^1");
    return MembershipInterval(sup, closed);
}

bool membership_refinement_divergent(const PowerLogFamily& fam, const Exponent& p) {
    double prev = 0.0, last_ratio = 1.0;
    for (int k = 8; k <= 14; ++k) {
        const double norm = lp_norm(fam.sample(1 << k), p);
        if (k > 8) last_ratio = norm / prev;
        prev = norm;
    }
    return last_ratio > 1.015;
}

}  // namespace parlat
