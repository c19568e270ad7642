// Exact arithmetic on Lebesgue exponents and their decorated refinements.
//
// An exponent p in [1, inf] is stored as its reciprocal t = 1/p, an exact
// rational in [0,1]. This makes p = inf an ordinary value (t = 0) and the
// conjugate exponent a subtraction: conj(t) = 1 - t.
//
// A decorated exponent carries one of three markers {Plus, Exact, Minus}
// indexing the refinement of the L^p chain: the space just inside L^p (p+),
// L^p itself, and the space just outside (p-). The total order used
// everywhere is the *inclusion* order of the corresponding spaces on a
// finite measure interval:
//
//     (t1,d1) < (t2,d2)  iff  t1 < t2, or t1 = t2 and rank d1 < rank d2,
//     rank: Plus = 0 < Exact = 1 < Minus = 2.
//
// Smaller element = smaller space; L^inf (t = 0) is the bottom. Note that
// p-value comparisons run the other way: a larger p means a smaller space.
// Helpers p_min/p_max are named in p-convention to match the usual formulas
// (p ^ q = min{p,q}); in inclusion order p_min is the max and p_max the min.
#pragma once

#include "parlat/rational.hpp"

#include <compare>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parlat {

class Exponent {
  public:
    Exponent() : t_(0) {}
    explicit Exponent(Rational reciprocal) : t_(std::move(reciprocal)) {
        if (t_ < Rational(0) || t_ > Rational(1))
            throw std::invalid_argument("exponent reciprocal must lie in [0,1]");
    }

    static Exponent from_p(const Rational& p) {
        if (p < Rational(1)) throw std::invalid_argument("exponent p must be >= 1");
        return Exponent(Rational(p.denominator(), p.numerator()));
    }
    static Exponent infinity() { return Exponent(Rational(0)); }
    static Exponent one() { return Exponent(Rational(1)); }

    const Rational& t() const { return t_; }
    bool is_infinite() const { return t_ == Rational(0); }
    // p as a rational; only valid for finite p.
    Rational p() const {
        if (is_infinite()) throw std::domain_error("p = inf has no rational value");
        return Rational(t_.denominator(), t_.numerator());
    }
    double p_double() const {
        return is_infinite() ? std::numeric_limits<double>::infinity()
                             : to_double(Rational(t_.denominator(), t_.numerator()));
    }

    friend auto operator<=>(const Exponent&, const Exponent&) = default;

  private:
    Rational t_;
};

// conj(p) with 1/p + 1/conj(p) = 1; exact, involutive.
inline Exponent conjugate(const Exponent& e) {
    return Exponent(Rational(1) - e.t());
}

enum class Decoration : int { Plus = 0, Exact = 1, Minus = 2 };

inline Decoration dual_decoration(Decoration d) {
    switch (d) {
        case Decoration::Plus: return Decoration::Minus;
        case Decoration::Minus: return Decoration::Plus;
        default: return Decoration::Exact;
    }
}

struct EnrichedExponent {
    Exponent base;
    Decoration dec = Decoration::Exact;

    EnrichedExponent() = default;
    EnrichedExponent(Exponent b, Decoration d = Decoration::Exact) : base(b), dec(d) {}

    static EnrichedExponent from_p(const Rational& p, Decoration d = Decoration::Exact) {
        return {Exponent::from_p(p), d};
    }
    static EnrichedExponent infinity() { return {Exponent::infinity(), Decoration::Exact}; }
    // L^omega, the space just outside L^inf; same object as "inf-".
    static EnrichedExponent omega() { return {Exponent::infinity(), Decoration::Minus}; }

    bool operator==(const EnrichedExponent&) const = default;
};

// Inclusion (chain) order: a < b iff the a-space is strictly inside the b-space.
inline std::strong_ordering enriched_compare(const EnrichedExponent& a,
                                             const EnrichedExponent& b) {
    if (a.base.t() != b.base.t())
        return a.base.t() < b.base.t() ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    const int ra = static_cast<int>(a.dec), rb = static_cast<int>(b.dec);
    return ra <=> rb;
}

inline bool enriched_leq(const EnrichedExponent& a, const EnrichedExponent& b) {
    return enriched_compare(a, b) <= 0;
}

// Order-reversing involution: t -> 1-t, Plus <-> Minus.
inline EnrichedExponent enriched_dual(const EnrichedExponent& e) {
    return {conjugate(e.base), dual_decoration(e.dec)};
}

// p-convention min/max (paper formulas): p_min(a,b) = "p ^ q" = min{p,q}.
// A smaller p is a *larger* space, so p_min is the inclusion-order max.
inline EnrichedExponent p_min(const EnrichedExponent& a, const EnrichedExponent& b) {
    return enriched_compare(a, b) >= 0 ? a : b;
}
inline EnrichedExponent p_max(const EnrichedExponent& a, const EnrichedExponent& b) {
    return enriched_compare(a, b) <= 0 ? a : b;
}

// Inclusion-order min/max (chain meet/join).
inline EnrichedExponent chain_min(const EnrichedExponent& a, const EnrichedExponent& b) {
    return enriched_compare(a, b) <= 0 ? a : b;
}
inline EnrichedExponent chain_max(const EnrichedExponent& a, const EnrichedExponent& b) {
    return enriched_compare(a, b) >= 0 ? a : b;
}

// Text form: "3", "3/2", "inf", "omega", with optional -/+ suffix.
// "omega" is the canonical spelling of "inf-". Round-trips losslessly.
inline std::string format_exponent(const EnrichedExponent& e) {
    if (e.base.is_infinite() && e.dec == Decoration::Minus) return "omega";
    std::string out = e.base.is_infinite() ? "inf" : format_rational(e.base.p());
    if (e.dec == Decoration::Minus) out += '-';
    if (e.dec == Decoration::Plus) out += '+';
    return out;
}

inline std::string format_exponent(const Exponent& e) {
    return format_exponent(EnrichedExponent{e});
}

inline std::optional<EnrichedExponent> parse_exponent(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (text.substr(0, 2) == "p=") text.remove_prefix(2);
    Decoration dec = Decoration::Exact;
    if (!text.empty() && (text.back() == '-' || text.back() == '+')) {
        dec = text.back() == '-' ? Decoration::Minus : Decoration::Plus;
        text.remove_suffix(1);
    }
    if (text == "omega") {
        if (dec != Decoration::Exact) return std::nullopt;
        return EnrichedExponent::omega();
    }
    if (text == "inf") return EnrichedExponent{Exponent::infinity(), dec};
    auto p = parse_rational(text);
    if (!p || *p < Rational(1)) return std::nullopt;
    return EnrichedExponent::from_p(*p, dec);
}

}  // namespace parlat
