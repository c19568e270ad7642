#include "parlat/suites.hpp"

#include "parlat/checks.hpp"
#include "parlat/scale.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parlat {

namespace {

CheckLine counted(std::string name, int failures, int total, std::string detail = {}) {
    CheckLine line;
    line.check = std::move(name);
    line.lhs = failures;
    line.rhs = total;
    line.pass = failures == 0;
    line.detail = std::move(detail);
    return line;
}

CheckLine bounded(std::string name, double lhs, double rhs, double slack) {
    CheckLine line;
    line.check = std::move(name);
    line.lhs = lhs;
    line.rhs = rhs;
    line.pass = lhs <= rhs * (1.0 + slack);
    return line;
}

// Rational (p,q) grid used by the exhaustive square-lattice checks:
// reciprocals i/(count+1), i = 1..count, all strictly between 0 and 1.
std::vector<EnrichedExponent> rational_grid(int count) {
    std::vector<EnrichedExponent> out;
    for (int i = 1; i <= count; ++i)
        out.push_back(EnrichedExponent{Exponent(Rational(i, count + 1))});
    return out;
}

Exponent random_exponent(Rng& rng, double p_max_value = 8.0) {
    // reciprocal on a fine rational lattice, p in [1, p_max_value]
    const std::int64_t den = 64;
    const auto lo = static_cast<std::int64_t>(std::ceil(den / p_max_value));
    return Exponent(Rational(rng.uniform_int(lo, den), den));
}

GridFunction sample_local_member(Rng& rng, const Exponent& s, int halfwidth,
                                 int resolution) {
    // A representative of the chain space with local exponent s: one
    // integrable singular spike (exponent theta with theta * s < 1 when s
    // is finite) plus bounded bumps.
    GridFunction f = GridFunction::real_window(halfwidth, resolution);
    const double center = rng.uniform(-0.5 * halfwidth, 0.5 * halfwidth);
    const double theta = s.is_infinite() ? 0.0 : 0.8 / s.p_double();
    const double amp = rng.uniform(0.2, 2.0);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double x = f.x_at(i);
        f.values[i] = theta > 0.0 ? amp * std::pow(std::abs(x - center), -theta) : 0.0;
    }
    const int bumps = static_cast<int>(rng.uniform_int(1, 2));
    for (int b = 0; b < bumps; ++b) {
        const double c = rng.uniform(-0.9 * halfwidth, 0.9 * halfwidth);
        const double w = rng.uniform(0.1, 0.8);
        const double a = rng.uniform(-1.0, 1.0);
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            const double d = (f.x_at(i) - c) / w;
            f.values[i] += a * std::exp(-d * d);
        }
    }
    return f;
}

}  // namespace

FiniteRelationAlgebra random_algebra(Rng& rng, int n) {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = i;
    // random partial matching on {1..n-1}; element 0 stays the unit
    std::vector<int> loose;
    for (int i = 1; i < n; ++i) loose.push_back(i);
    while (loose.size() >= 2) {
        if (rng.bernoulli(0.4)) {  // leave a fixed point
            loose.pop_back();
            continue;
        }
        const int a = loose.back();
        loose.pop_back();
        const auto pick = static_cast<std::size_t>(rng.uniform_int(0, loose.size() - 1));
        const int b = loose[pick];
        loose.erase(loose.begin() + static_cast<std::ptrdiff_t>(pick));
        inv[a] = b;
        inv[b] = a;
    }
    const double density = rng.uniform(0.15, 0.85);
    std::vector<std::vector<int>> gamma(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (rng.bernoulli(density)) {
                gamma[x][y] = 1;
                gamma[inv[y]][inv[x]] = 1;
            }
    for (int x = 0; x < n; ++x) gamma[0][x] = gamma[x][0] = 1;
    return FiniteRelationAlgebra(n, std::move(inv), gamma, 0);
}

SuiteResult suite_galois(const SuiteConfig& config) {
    SuiteResult result{"galois", {}, true};
    const int trials = config.trials > 0 ? config.trials : 500;
    Rng rng(config.seed);

    int law_failures = 0, oracle_failures = 0, reconstruction_failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = static_cast<int>(rng.uniform_int(2, 10));
        const FiniteRelationAlgebra a = random_algebra(rng, n);
        if (!verify_galois_laws(a).pass) ++law_failures;
        if (closed_family(a, Side::Left).sets != closed_family_powerset(a, Side::Left).sets ||
            closed_family(a, Side::Right).sets != closed_family_powerset(a, Side::Right).sets)
            ++oracle_failures;
        if (!matching_pairs(a).reconstructs) ++reconstruction_failures;
    }
    result.add(counted("closure and lattice laws on random algebras (n<=10)",
                       law_failures, trials));
    result.add(counted("closed families match the power-set oracle", oracle_failures,
                       trials));
    result.add(counted("relation reconstructed from matching pairs",
                       reconstruction_failures, trials));
    return result;
}

SuiteResult suite_lattice(const SuiteConfig& config) {
    SuiteResult result{"lattice", {}, true};
    const auto grid = rational_grid(20);
    const EnrichedExponent top = EnrichedExponent::infinity();
    const EnrichedExponent one = EnrichedExponent::from_p(Rational(1));

    // Exhaustive formula checks on the 20x20 rational grid. Expected values
    // are rebuilt from raw reciprocal arithmetic, not from the lattice ops.
    int mult_fail = 0, iter_fail = 0, conv_fail = 0, closure_fail = 0, symm_fail = 0;
    for (const auto& p : grid)
        for (const auto& q : grid) {
            const SpacePoint a = SpacePoint::square(p, q);
            const Rational tp = p.base.t(), tq = q.base.t();
            const Rational dual_meet = std::max(Rational(1) - tp, Rational(1) - tq);
            const SpacePoint expected_mult =
                SpacePoint::square({Exponent(dual_meet)}, top);
            if (mult_multiplier(a) != expected_mult) ++mult_fail;
            const SpacePoint expected_iter =
                SpacePoint::square({Exponent(std::min(tp, tq))}, top);
            if (iterated_multiplier_check(a) != expected_iter) ++iter_fail;
            const SpacePoint expected_conv = SpacePoint::square(one, {Exponent(dual_meet)});
            if (conv_multiplier(a) != expected_conv) ++conv_fail;
            if (mult_multiplier(iterated_multiplier_check(a)) != mult_multiplier(a))
                ++closure_fail;
            for (const auto& r : grid) {
                const SpacePoint b = SpacePoint::square(q, r);
                if (is_multiplicable(a, b) != is_multiplicable(b, a)) ++symm_fail;
            }
        }
    result.add(counted("square multiplier formula on 20x20 grid", mult_fail, 400));
    result.add(counted("iterated multiplier lands on (p v q, inf)", iter_fail, 400));
    result.add(counted("convolution multiplier formula on 20x20 grid", conv_fail, 400));
    result.add(counted("MMM = M on the grid", closure_fail, 400));
    result.add(counted("multiplicability is symmetric", symm_fail, 400 * 20));

    // The meet instance L(p,q) ^ L(q,s) = L(q) for p < q < s.
    int meet_fail = 0, meet_total = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = 0; k < j; ++k) {
                // reciprocals descend: t_i > t_j > t_k means p_i < p_j < p_k
                const auto &p = grid[i], &q = grid[j], &s = grid[k];
                ++meet_total;
                if (space_meet(SpacePoint::square(p, q), SpacePoint::square(q, s)) !=
                    SpacePoint::square(q, q))
                    ++meet_fail;
            }
    result.add(counted("L(p,q) ^ L(q,s) = L(q) for p<q<s", meet_fail, meet_total));

    // Multiplier chain is closed under the anti-isomorphism on the bottom row.
    int chain_fail = 0;
    for (const auto& s : grid)
        for (const auto& t : grid) {
            const SpacePoint a = SpacePoint::square(s, top);
            const SpacePoint b = SpacePoint::square(t, top);
            if (mult_multiplier(space_meet(a, b)) !=
                space_join(mult_multiplier(a), mult_multiplier(b)))
                ++chain_fail;
        }
    result.add(counted("M(a ^ b) = M(a) v M(b) on the multiplier chain", chain_fail, 400));

    // Membership classification of the power-log family.
    {
        const MembershipInterval half = membership_set(PowerLogFamily({1, 2}, {0}));
        const MembershipInterval closed = membership_set(PowerLogFamily({1, 2}, {1}));
        const bool ok = half.sup_p == Exponent(Rational(1, 2)) && !half.closed_at_sup &&
                        closed.sup_p == Exponent(Rational(1, 2)) && closed.closed_at_sup &&
                        element_multiplier(half) ==
                            SpacePoint::chain({Exponent(Rational(1, 2)), Decoration::Plus}) &&
                        element_multiplier(closed) ==
                            SpacePoint::chain({Exponent(Rational(1, 2))});
        result.add(counted("power-log membership intervals and element multipliers",
                           ok ? 0 : 1, 1));
    }
    {
        // Analytic rule vs refinement oracle on 20 (alpha, beta, p) triples.
        struct Triple {
            Rational alpha, beta, p;
        };
        const std::vector<Triple> triples = {
            // comfortably convergent
            {{0}, {0}, {3}},          {{0}, {2}, {2}},
            {{1, 4}, {0}, {1}},       {{1, 4}, {0}, {2}},
            {{1, 8}, {1}, {4}},       {{1, 3}, {0}, {1}},
            {{1, 2}, {1}, {1}},       {{1, 4}, {1, 2}, {2}},
            // convergent boundary alpha*p = 1 with beta*p > 1
            {{1, 2}, {2}, {2}},       {{1}, {2}, {1}},
            // divergent boundary alpha*p = 1 with beta*p <= 1/2
            {{1, 2}, {0}, {2}},       {{1}, {0}, {1}},
            {{1}, {1, 2}, {1}},
            // power divergence alpha*p >= 5/4
            {{3, 4}, {0}, {2}},       {{1, 2}, {0}, {3}},
            {{2, 3}, {0}, {2}},       {{1, 2}, {1}, {4}},
            {{1}, {0}, {2}},          {{5, 8}, {0}, {2}},
            {{1, 2}, {1, 4}, {4}},
        };
        int fails = 0;
        for (const auto& t : triples) {
            const PowerLogFamily fam(t.alpha, t.beta);
            const Exponent p = Exponent::from_p(t.p);
            const bool in_lp =
                t.alpha * t.p < Rational(1) ||
                (t.alpha * t.p == Rational(1) && t.beta * t.p > Rational(1));
            if (membership_refinement_divergent(fam, p) != !in_lp) ++fails;
        }
        result.add(counted("refinement oracle agrees with the analytic membership rule",
                           fails, static_cast<int>(triples.size())));
    }

    // Inductive-norm bracket against the dense threshold oracle.
    {
        Rng rng(config.seed + 1);
        const int trials = config.trials > 0 ? std::min(config.trials, 200) : 50;
        const int resolution = config.resolution > 0 ? config.resolution : 256;
        int bracket_fails = 0, trivial_fails = 0, converged_all = 0;
        for (int t = 0; t < trials; ++t) {
            const GridFunction f = random_spiky(rng, resolution);
            // well-separated exponent pair
            const Exponent e1(Rational(rng.uniform_int(40, 64), 64));
            const Exponent e2(Rational(rng.uniform_int(8, 24), 64));
            const InductiveNormResult r = inductive_norm(f, e1, e2);
            const double oracle = threshold_family_value(f, e1, e2, 400);
            if (!(r.value <= oracle * (1.0 + 1e-12) && oracle <= 1.01 * r.value))
                ++bracket_fails;
            if (!(r.value <=
                  std::min(lp_norm(f, e1), lp_norm(f, e2)) * (1.0 + 1e-12)))
                ++trivial_fails;
            if (r.converged) ++converged_all;
        }
        result.add(counted("inductive norm brackets the dense threshold oracle",
                           bracket_fails, trials));
        result.add(counted("inductive norm below both one-piece splits", trivial_fails,
                           trials));
    }

    // Duality pairing fuzz on random interior square points.
    {
        Rng rng(config.seed + 2);
        const int trials = config.trials > 0 ? std::min(config.trials, 500) : 200;
        int fails = 0;
        for (int t = 0; t < trials; ++t) {
            GridFunction f = random_central_bump(rng, 2, 128);
            GridFunction g = random_central_bump(rng, 2, 128);
            const Exponent tp(Rational(rng.uniform_int(8, 56), 64));
            const Exponent tq(Rational(rng.uniform_int(8, 56), 64));
            if (tp == tq) continue;
            const SpacePoint space = SpacePoint::square({tp}, {tq});
            if (!dual_pairing_check(f, g, space).pass) ++fails;
        }
        result.add(counted("duality pairing bounded by the two space norms", fails, trials));
    }
    return result;
}

SuiteResult suite_holder(const SuiteConfig& config) {
    SuiteResult result{"holder", {}, true};
    const int trials = config.trials > 0 ? config.trials : 1000;
    const int resolution = config.resolution > 0 ? config.resolution : 512;
    Rng rng(config.seed);

    int fails = 0;
    for (int t = 0; t < trials; ++t) {
        const GridFunction f = random_smooth(rng, resolution);
        const GridFunction g = random_smooth(rng, resolution);
        if (!check_holder(f, g, random_exponent(rng)).pass) ++fails;
    }
    result.add(counted("product bound on random smooth pairs", fails, trials));

    {
        GridFunction ones = GridFunction::unit_interval(resolution);
        for (auto& v : ones.values) v = 1.0;
        const InequalityReport eq = check_holder(ones, ones, Exponent::from_p(Rational(2)));
        result.add({"constant pair attains equality", std::abs(eq.lhs - eq.rhs), 1e-12,
                    std::abs(eq.lhs - eq.rhs) <= 1e-12, ""});
        // aligned pair: ||f conj(f)||_1 = ||f||_2^2 exactly in quadrature
        const GridFunction f = random_smooth(rng, resolution);
        GridFunction fc = f;
        for (auto& v : fc.values) v = std::conj(v);
        const double lhs = lp_norm(pointwise_product(f, fc), Exponent::one());
        const double rhs = lp_norm(f, Exponent::from_p(Rational(2)));
        result.add({"aligned pair is the Cauchy-Schwarz equality case",
                    std::abs(lhs - rhs * rhs), 1e-12 * std::max(1.0, rhs * rhs),
                    std::abs(lhs - rhs * rhs) <= 1e-12 * std::max(1.0, rhs * rhs), ""});
    }

    // Module inequality ||ab|| <= ||a||_LM ||b||_M across the three variants.
    {
        Rng brng(config.seed + 3);
        int chain_fails = 0, square_fails = 0, amalgam_fails = 0;
        const int rounds = std::max(1, trials / 10);
        for (int t = 0; t < rounds; ++t) {
            const Exponent p = random_exponent(brng);
            GridFunction b = random_smooth(brng, 256);
            GridFunction a = random_smooth(brng, 256);
            if (!check_banach_inequality(a, b, SpacePoint::chain({p})).pass) ++chain_fails;

            const Exponent s(Rational(brng.uniform_int(16, 56), 64));
            const SpacePoint m =
                SpacePoint::square({s}, EnrichedExponent::infinity());
            GridFunction bs = sample_local_member(brng, s, 2, 128);
            GridFunction as = sample_local_member(brng, conjugate(s), 2, 128);
            if (!check_banach_inequality(as, bs, m).pass) ++square_fails;

            const Exponent q(Rational(brng.uniform_int(8, 56), 64));
            const SpacePoint w = SpacePoint::amalgam({s}, {q});
            GridFunction bw = random_central_bump(brng, 2, 128);
            GridFunction aw = sample_local_member(brng, conjugate(s), 2, 128);
            if (!check_banach_inequality(aw, bw, w).pass) ++amalgam_fails;
        }
        result.add(counted("module inequality on the chain", chain_fails, rounds));
        result.add(counted("module inequality on the square", square_fails, rounds));
        result.add(counted("module inequality on amalgams", amalgam_fails, rounds));
    }
    return result;
}

SuiteResult suite_young(const SuiteConfig& config) {
    SuiteResult result{"young", {}, true};
    const int trials = config.trials > 0 ? config.trials : 500;
    const int resolution = config.resolution > 0 ? config.resolution : 256;
    const int halfwidth = 4;
    Rng rng(config.seed);

    int fails = 0;
    for (int t = 0; t < trials; ++t) {
        const GridFunction f = random_central_bump(rng, halfwidth, resolution);
        const GridFunction g = random_central_bump(rng, halfwidth, resolution);
        // admissible pair: 1/p + 1/q >= 1 on a rational lattice
        const std::int64_t jp = rng.uniform_int(0, 32);
        const std::int64_t jq = rng.uniform_int(32 - jp, 32);
        const Exponent ep(Rational(jp, 32)), eq(Rational(jq, 32));
        if (!check_young(f, g, ep, eq).pass) ++fails;
    }
    result.add(counted("convolution bound on compactly supported pairs", fails, trials));

    {
        const GridFunction box = indicator(-0.5, 0.5, halfwidth, resolution);
        const InequalityReport eq = check_young(box, box, Exponent::one(), Exponent::one());
        const double gap = std::abs(eq.lhs - eq.rhs) / std::max(eq.rhs, 1e-300);
        result.add({"L1 x L1 indicator pair attains equality", gap, 1e-6, gap <= 1e-6, ""});
    }
    return result;
}

SuiteResult suite_amalgam(const SuiteConfig& config) {
    SuiteResult result{"amalgam", {}, true};
    const int resolution = config.resolution > 0 ? config.resolution : 128;
    const int halfwidth = 2;
    Rng rng(config.seed);

    const int norm_trials = config.trials > 0 ? std::min(config.trials, 200) : 50;
    int diag_fails = 0;
    for (int t = 0; t < norm_trials; ++t) {
        GridFunction f = random_central_bump(rng, halfwidth, resolution);
        const Exponent p = rng.bernoulli(0.15) ? Exponent::infinity() : random_exponent(rng);
        const double wpp = amalgam_norm(f, p, p);
        const double lp = lp_norm(f, p);
        if (std::abs(wpp - lp) > 1e-12 * std::max(lp, 1e-300)) ++diag_fails;
    }
    result.add(counted("W(p,p) norm equals the plain p-norm", diag_fails, norm_trials));

    const int holder_trials = config.trials > 0 ? config.trials : 200;
    int fails = 0;
    for (int t = 0; t < holder_trials; ++t) {
        const GridFunction f = random_central_bump(rng, halfwidth, resolution);
        const GridFunction g = random_central_bump(rng, halfwidth, resolution);
        const EnrichedExponent p{random_exponent(rng)};
        const EnrichedExponent q{random_exponent(rng)};
        if (!check_amalgam_holder(f, g, p, q).pass) ++fails;
    }
    result.add(counted("amalgam product bound on random pairs", fails, holder_trials));
    return result;
}

SuiteResult suite_lhs(const SuiteConfig& config) {
    SuiteResult result{"lhs", {}, true};

    // Closed-form index sets of the order-1 diagonal on {-2..2}, h_k = k.
    {
        const HilbertScale scale = HilbertScale::make(2, 64, WeightKind::Linear);
        const ScaleOperator h1 = ScaleOperator::diagonal_power(scale, 1, 1.5);
        const IndexSets sets = index_sets(scale, h1);
        const bool ok = sets.domain == std::vector<int>{-1, 0, 1, 2} &&
                        sets.range == std::vector<int>{-2, -1, 0, 1};
        result.add(counted("order-1 diagonal has the closed-form index sets", ok ? 0 : 1, 1));

        const ScaleOperator id = ScaleOperator::identity(scale, 1.5);
        const IndexSets idsets = index_sets(scale, id);
        result.add(counted("identity is admissible everywhere",
                           idsets.domain == scale.indices() &&
                                   idsets.range == scale.indices()
                               ? 0
                               : 1,
                           1));
    }

    // Adjoint norm symmetry on random matrices.
    {
        const int trials = config.trials > 0 ? std::min(config.trials, 200) : 100;
        const HilbertScale scale = HilbertScale::make(2, 32, WeightKind::Linear);
        Rng rng(config.seed);
        int fails = 0;
        for (int t = 0; t < trials; ++t) {
            Eigen::MatrixXcd m(scale.dim, scale.dim);
            for (int r = 0; r < scale.dim; ++r)
                for (int c = 0; c < scale.dim; ++c)
                    m(r, c) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            const Eigen::MatrixXcd ma = m.adjoint();
            bool trial_ok = true;
            for (int q = -2; q <= 2 && trial_ok; ++q)
                for (int p = -2; p <= 2; ++p) {
                    const double lhs = op_norm(scale, m, q, p).value;
                    const double rhs = op_norm(scale, ma, -p, -q).value;
                    if (std::abs(lhs - rhs) > 1e-6 * std::max({lhs, rhs, 1e-300})) {
                        trial_ok = false;
                        break;
                    }
                }
            if (!trial_ok) ++fails;
        }
        result.add(counted("adjoint norm symmetry ||A||_{q->p} = ||A*||_{-p->-q}", fails,
                           trials));
    }

    // Composition definedness matches the factorization-channel criterion,
    // and definedness is monotone when the scale is enlarged.
    {
        int fails = 0, mono_fails = 0, total = 0;
        for (int order_a = 0; order_a <= 3; ++order_a)
            for (int order_b = 0; order_b <= 3; ++order_b) {
                for (int n = 1; n <= 3; ++n) {
                    const HilbertScale scale = HilbertScale::make(n, 16, WeightKind::Linear);
                    const ScaleOperator a = ScaleOperator::diagonal_power(scale, order_a, 1.5);
                    const ScaleOperator b = ScaleOperator::diagonal_power(scale, order_b, 1.5);
                    const bool defined = partial_compose(scale, a, b).has_value();
                    const bool expected = order_a + order_b <= 2 * n;
                    ++total;
                    if (defined != expected) ++fails;
                    if (!defined) {
                        const int n2 = (order_a + order_b + 1) / 2;
                        const HilbertScale larger =
                            HilbertScale::make(n2, 16, WeightKind::Linear);
                        if (!partial_compose(
                                 larger,
                                 ScaleOperator::diagonal_power(larger, order_a, 1.5),
                                 ScaleOperator::diagonal_power(larger, order_b, 1.5))
                                 .has_value())
                            ++mono_fails;
                    }
                }
            }
        result.add(counted("composition defined iff the factorization channel is nonempty",
                           fails, total));
        result.add(counted("undefined compositions become defined on a larger scale",
                           mono_fails, total));
    }

    // Multiplier set lattice on a diagonal sample.
    {
        const HilbertScale scale = HilbertScale::make(2, 16, WeightKind::Linear);
        std::vector<ScaleOperator> sample;
        for (int order = 0; order <= 3; ++order)
            sample.push_back(ScaleOperator::diagonal_power(scale, order, 1.5));
        sample.push_back(ScaleOperator::shift(scale, 1, 1.5));

        int membership_fails = 0, mono_fails = 0, lattice_fails = 0;
        std::vector<MultiplierSets> by_index;
        for (int s = -2; s <= 2; ++s) by_index.push_back(multiplier_sets(scale, sample, s));
        for (int s = -2; s <= 2; ++s) {
            const auto& ms = by_index[static_cast<std::size_t>(s + 2)];
            for (int order = 0; order <= 3; ++order) {
                // diagonal of order a: s in D iff s - a >= -n, s in I iff s <= n - a
                const bool left = std::find(ms.left_members.begin(), ms.left_members.end(),
                                            order) != ms.left_members.end();
                const bool right = std::find(ms.right_members.begin(),
                                             ms.right_members.end(),
                                             order) != ms.right_members.end();
                if (left != (s - order >= -2)) ++membership_fails;
                if (right != (s <= 2 - order)) ++membership_fails;
            }
        }
        // R grows as the level space grows (numeric index decreases).
        for (int s = -2; s < 2; ++s) {
            const auto& lo = by_index[static_cast<std::size_t>(s + 2)].right_members;
            const auto& hi = by_index[static_cast<std::size_t>(s + 3)].right_members;
            for (int member : hi)
                if (std::find(lo.begin(), lo.end(), member) == lo.end()) ++mono_fails;
        }
        // L_s n L_u = L_s and R_s n R_u = R_u for numeric s <= u, i.e. the
        // meets land back on members of the two chains.
        for (int s = -2; s <= 2; ++s)
            for (int u = s; u <= 2; ++u) {
                const auto& ls = by_index[static_cast<std::size_t>(s + 2)].left_members;
                const auto& lu = by_index[static_cast<std::size_t>(u + 2)].left_members;
                std::vector<int> inter;
                for (int m : ls)
                    if (std::find(lu.begin(), lu.end(), m) != lu.end()) inter.push_back(m);
                if (inter != ls) ++lattice_fails;
                const auto& rs = by_index[static_cast<std::size_t>(s + 2)].right_members;
                const auto& ru = by_index[static_cast<std::size_t>(u + 2)].right_members;
                std::vector<int> rinter;
                for (int m : rs)
                    if (std::find(ru.begin(), ru.end(), m) != ru.end()) rinter.push_back(m);
                if (rinter != ru) ++lattice_fails;
            }
        result.add(counted("diagonal multiplier membership matches the closed form",
                           membership_fails, 20));
        result.add(counted("right multiplier sets grow with the level space", mono_fails, 4));
        result.add(counted("multiplier sets form the expected sublattice", lattice_fails,
                           15));
    }

    // Triplet classification.
    {
        const HilbertScale scale = triplet_configuration(16);
        const TripletClass id = classify_on_triplet(scale, ScaleOperator::identity(scale, 1.5));
        const TripletClass h1 =
            classify_on_triplet(scale, ScaleOperator::diagonal_power(scale, 1, 1.5));
        const TripletClass h0 =
            classify_on_triplet(scale, ScaleOperator::diagonal_power(scale, 0, 1.5));
        const bool ok = id.in_model && id.in_ra && id.in_la && id.in_core &&
                        h1.in_model && h1.left_of_ra && !h1.in_ra && !h1.in_core &&
                        h0.in_core;
        result.add(counted("triplet classes of identity and diagonal orders", ok ? 0 : 1, 1));
    }
    return result;
}

SuiteResult suite_counterexample(const SuiteConfig& config) {
    (void)config;
    SuiteResult result{"counterexample", {}, true};
    const int n = 3;

    const FiniteRelationAlgebra alg = degree_truncation_algebra(n);
    const ClosedFamily fr = closed_family(alg, Side::Right);

    // The multiplier sets form the full degree chain, for every cutoff.
    int chain_fails = 0, mj_fails = 0;
    for (int m = 1; m <= 6; ++m) {
        const FiniteRelationAlgebra a = degree_truncation_algebra(m);
        std::vector<Subset> chain;
        for (int k = 0; k <= m; ++k) chain.push_back((Subset(1) << (k + 1)) - 1);
        if (closed_family(a, Side::Right).sets != chain) ++chain_fails;
        for (int j = 0; j <= m; ++j)
            if (right_mult(a, Subset(1) << j) != chain[static_cast<std::size_t>(m - j)])
                ++mj_fails;
    }
    result.add(counted("closed family is the degree chain (cutoffs 1..6)", chain_fails, 6));
    result.add(counted("M(degree j) = degrees <= n-j (cutoffs 1..6)", mj_fails, 2 + 3 + 4 + 5 + 6 + 7));

    result.add(counted("universal right multipliers collapse to degree 0",
                       right_mult(alg, alg.full()) == Subset(1) ? 0 : 1, 1));

    const TightnessReport deg = tightness_check(alg, fr.sets);
    result.add(counted("degree algebra is not tight", deg.tight ? 1 : 0, 1,
                       "chain length " + std::to_string(fr.sets.size())));

    const FiniteRelationAlgebra quasi = quasi_algebra(6, 2);
    const TightnessReport qt =
        tightness_check(quasi, closed_family(quasi, Side::Right).sets);
    result.add(counted("two-tier quasi model is tight", qt.tight ? 0 : 1, 1));

    const FiniteRelationAlgebra total = total_algebra(4);
    const TightnessReport tt =
        tightness_check(total, closed_family(total, Side::Right).sets);
    result.add(counted("total relation is tight", tt.tight ? 0 : 1, 1));

    result.add(counted("galois laws hold on the degree algebra",
                       verify_galois_laws(alg).pass ? 0 : 1, 1));
    return result;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
    if (name == "galois") return suite_galois(config);
    if (name == "lattice") return suite_lattice(config);
    if (name == "holder") return suite_holder(config);
    if (name == "young") return suite_young(config);
    if (name == "amalgam") return suite_amalgam(config);
    if (name == "lhs") return suite_lhs(config);
    if (name == "counterexample") return suite_counterexample(config);
    if (name == "all") {
        SuiteResult all{"all", {}, true};
        for (const auto& sub : suite_names())
            if (sub != "all") all.merge(run_suite(sub, config));
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"galois", "lattice", "holder", "young",
            "amalgam", "lhs",    "counterexample", "all"};
}

}  // namespace parlat
