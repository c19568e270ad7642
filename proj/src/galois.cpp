#include "parlat/galois.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace parlat {

Subset left_mult(const FiniteRelationAlgebra& a, Subset s) {
    Subset out = a.full();
    for (int y = 0; y < a.n && out; ++y)
        if (s >> y & 1) out &= a.gamma_cols[y];
    return out;
}

Subset right_mult(const FiniteRelationAlgebra& a, Subset s) {
    Subset out = a.full();
    for (int x = 0; x < a.n && out; ++x)
        if (s >> x & 1) out &= a.gamma_rows[x];
    return out;
}

Subset lr_closure(const FiniteRelationAlgebra& a, Subset s) {
    return left_mult(a, right_mult(a, s));
}

Subset rl_closure(const FiniteRelationAlgebra& a, Subset s) {
    return right_mult(a, left_mult(a, s));
}

namespace {

void sort_family(std::vector<Subset>& sets) {
    std::sort(sets.begin(), sets.end(), [](Subset x, Subset y) {
        const int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
}

// Every closed set on the Left side is L(M) for some M, i.e. an
// intersection of single-element polars L({y}) (the empty intersection
// giving the full carrier). The family is the meet-closure of the polars.
std::vector<Subset> meet_closure(const FiniteRelationAlgebra& a, Side side) {
    std::set<Subset> family;
    family.insert(a.full());
    std::vector<Subset> generators;
    for (int e = 0; e < a.n; ++e) {
        const Subset polar = side == Side::Left ? left_mult(a, Subset(1) << e)
                                                : right_mult(a, Subset(1) << e);
        generators.push_back(polar);
        family.insert(polar);
    }
    std::vector<Subset> frontier(family.begin(), family.end());
    while (!frontier.empty()) {
        std::vector<Subset> fresh;
        for (Subset s : frontier)
            for (Subset g : generators) {
                const Subset meet = s & g;
                if (family.insert(meet).second) fresh.push_back(meet);
            }
        frontier = std::move(fresh);
    }
    return {family.begin(), family.end()};
}

}  // namespace

bool ClosedFamily::contains(Subset s) const {
    return std::find(sets.begin(), sets.end(), s) != sets.end();
}

ClosedFamily closed_family(const FiniteRelationAlgebra& a, Side side) {
    if (a.n > 20)
        throw std::invalid_argument("closed_family: carrier size exceeds 20");
    ClosedFamily out;
    out.side = side;
    out.sets = meet_closure(a, side);
    sort_family(out.sets);
    return out;
}

ClosedFamily closed_family_powerset(const FiniteRelationAlgebra& a, Side side) {
    if (a.n > 20)
        throw std::invalid_argument("closed_family_powerset: carrier size exceeds 20");
    std::set<Subset> family;
    const Subset full = a.full();
    for (Subset s = 0;; ++s) {
        const Subset c = side == Side::Left ? lr_closure(a, s) : rl_closure(a, s);
        if (c == s) family.insert(s);
        if (s == full) break;
    }
    ClosedFamily out;
    out.side = side;
    out.sets.assign(family.begin(), family.end());
    sort_family(out.sets);
    return out;
}

namespace {

void add_check(GaloisLawReport& report, std::string name, bool pass,
               std::string counterexample = {}) {
    report.pass = report.pass && pass;
    report.checks.push_back({std::move(name), pass, pass ? "" : std::move(counterexample)});
}

}  // namespace

GaloisLawReport verify_galois_laws(const FiniteRelationAlgebra& a) {
    GaloisLawReport report;
    const Subset full = a.full();

    bool extensive = true, idem_l = true, idem_r = true, antitone = true;
    std::string ce;
    for (Subset s = 0;; ++s) {
        if ((s & lr_closure(a, s)) != s || (s & rl_closure(a, s)) != s) {
            extensive = false;
            ce = format_subset(s);
        }
        if (left_mult(a, rl_closure(a, s)) != left_mult(a, s)) {
            idem_l = false;
            ce = format_subset(s);
        }
        if (right_mult(a, lr_closure(a, s)) != right_mult(a, s)) {
            idem_r = false;
            ce = format_subset(s);
        }
        const Subset t = s | (s >> 1);  // a superset companion
        if ((left_mult(a, t) & left_mult(a, s)) != left_mult(a, t)) {
            antitone = false;
            ce = format_subset(s);
        }
        if (s == full) break;
    }
    add_check(report, "S subset of LR(S) and RL(S)", extensive, ce);
    add_check(report, "LRL = L", idem_l, ce);
    add_check(report, "RLR = R", idem_r, ce);
    add_check(report, "L reverses inclusion", antitone, ce);

    const ClosedFamily fl = closed_family(a, Side::Left);
    const ClosedFamily fr = closed_family(a, Side::Right);

    // L maps F^R into F^L and back, inverse on closed sets.
    bool bijective = fl.sets.size() == fr.sets.size();
    std::string bce;
    for (Subset m : fr.sets) {
        const Subset n = left_mult(a, m);
        if (!fl.contains(n) || right_mult(a, n) != m) {
            bijective = false;
            bce = format_subset(m);
            break;
        }
    }
    add_check(report, "L and R are inverse bijections between the closed families",
              bijective, bce);

    // Anti-isomorphism on meets: L(M ^ N) = LM v LN, where the join in F^L
    // is the LR-closure of the union; mirrored for R.
    bool anti = true;
    std::string ace;
    for (Subset m : fr.sets) {
        for (Subset n : fr.sets) {
            if (left_mult(a, m & n) != lr_closure(a, left_mult(a, m) | left_mult(a, n))) {
                anti = false;
                ace = format_subset(m) + " vs " + format_subset(n);
                break;
            }
        }
        if (!anti) break;
    }
    for (Subset m : fl.sets) {
        if (!anti) break;
        for (Subset n : fl.sets) {
            if (right_mult(a, m & n) !=
                rl_closure(a, right_mult(a, m) | right_mult(a, n))) {
                anti = false;
                ace = format_subset(m) + " vs " + format_subset(n);
                break;
            }
        }
    }
    add_check(report, "L(M ^ N) = LM v LN (both sides)", anti, ace);

    // Involution: an order-preserving bijection F^L <-> F^R.
    bool invo = true;
    std::string ice;
    for (Subset n : fl.sets)
        if (!fr.contains(a.star(n))) {
            invo = false;
            ice = format_subset(n);
            break;
        }
    for (Subset m : fr.sets)
        if (invo && !fl.contains(a.star(m))) {
            invo = false;
            ice = format_subset(m);
            break;
        }
    add_check(report, "involution maps F^L onto F^R", invo, ice);

    // (L(S))* = R(S*) elementwise.
    bool exch = true;
    std::string ece;
    for (Subset s = 0;; ++s) {
        if (a.star(left_mult(a, s)) != right_mult(a, a.star(s))) {
            exch = false;
            ece = format_subset(s);
        }
        if (s == full) break;
    }
    add_check(report, "(L S)* = R(S*)", exch, ece);

    // Lattice extremes.
    const bool extremes = fl.contains(full) && fl.contains(left_mult(a, full)) &&
                          fr.contains(full) && fr.contains(right_mult(a, full));
    add_check(report, "closed families contain carrier and universal multipliers",
              extremes);
    return report;
}

MatchingPairs matching_pairs(const FiniteRelationAlgebra& a) {
    MatchingPairs out;
    const ClosedFamily fr = closed_family(a, Side::Right);
    for (Subset m : fr.sets) {
        const Subset n = left_mult(a, m);
        if (right_mult(a, n) == m) out.pairs.emplace_back(n, m);
    }
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y) {
            bool witnessed = false;
            for (const auto& [n, m] : out.pairs)
                if ((n >> x & 1) && (m >> y & 1)) {
                    witnessed = true;
                    break;
                }
            if (witnessed != a.gamma(x, y)) out.reconstructs = false;
        }
    return out;
}

bool is_generating(const FiniteRelationAlgebra& a, const std::vector<Subset>& fam,
                   Side side) {
    for (Subset m : fam) {
        const Subset closed = side == Side::Right ? rl_closure(a, m) : lr_closure(a, m);
        if (closed != m)
            throw std::invalid_argument("is_generating: family member is not closed");
    }
    const Subset universal =
        side == Side::Right ? right_mult(a, a.full()) : left_mult(a, a.full());
    auto in_fam = [&](Subset s) {
        return std::find(fam.begin(), fam.end(), s) != fam.end();
    };
    if (!in_fam(universal) || !in_fam(a.full())) return false;
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y) {
            bool witnessed = false;
            for (Subset m : fam) {
                const bool hit = side == Side::Right
                                     ? ((m >> y & 1) && (left_mult(a, m) >> x & 1))
                                     : ((m >> x & 1) && (right_mult(a, m) >> y & 1));
                if (hit) {
                    witnessed = true;
                    break;
                }
            }
            if (witnessed != a.gamma(x, y)) return false;
        }
    return true;
}

TightnessReport tightness_check(const FiniteRelationAlgebra& a,
                                const std::vector<Subset>& fam) {
    if (!is_generating(a, fam, Side::Right))
        throw std::invalid_argument("tightness_check: family is not generating");
    TightnessReport report;
    report.universal = right_mult(a, a.full());

    // Orbit of the universal right multipliers under the two polarity maps.
    std::set<Subset> reached{report.universal};
    std::vector<Subset> frontier{report.universal};
    while (!frontier.empty()) {
        std::vector<Subset> fresh;
        for (Subset s : frontier)
            for (Subset image : {left_mult(a, s), right_mult(a, s)})
                if (reached.insert(image).second) fresh.push_back(image);
        frontier = std::move(fresh);
    }
    report.reached.assign(reached.begin(), reached.end());

    for (Subset m : fam) {
        const bool dense = reached.count(m) > 0;
        report.members.push_back({m, dense});
        report.tight = report.tight && dense;
    }
    return report;
}

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (s >> i & 1) out.push_back(i);
    return out;
}

std::string format_subset(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

}  // namespace parlat
