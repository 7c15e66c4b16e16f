#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "landau/coefficient_bounds.hpp"
#include "landau/coefficients.hpp"
#include "landau/conjecture.hpp"
#include "landau/extremal.hpp"
#include "landau/hypotheses.hpp"
#include "landau/lemmas.hpp"
#include "landau/sharpness.hpp"
#include "landau/tables.hpp"
#include "landau/univalence.hpp"

namespace landau {

/// One named check. `margin` is positive when the check holds with room to
/// spare; for equality checks it is tolerance - |value - expected|.
struct Check {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double margin = 0.0;
    bool passed = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const {
        for (const auto& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }

    int failures() const {
        int n = 0;
        for (const auto& c : checks) {
            n += c.passed ? 0 : 1;
        }
        return n;
    }

    void add(std::string name, double value, double expected, double margin, bool passed) {
        checks.push_back({std::move(name), value, expected, margin, passed});
    }

    /// |value - expected| <= tol
    void add_close(std::string name, double value, double expected, double tol) {
        const double margin = tol - std::abs(value - expected);
        add(std::move(name), value, expected, margin, margin >= 0.0);
    }
};

namespace detail {

inline std::string fmt_g10(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

inline std::string fmt_params(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

/// Seeded random map of degree 1..16 with coefficients in the unit box;
/// b_0 = 0 since conj(g(0)) folds into a_0.
inline HarmonicMap random_test_map(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), 0x5eedu};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> degree(1, 16);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    const auto N = static_cast<std::size_t>(degree(rng));
    PowerSeries h(N);
    PowerSeries g(N);
    for (std::size_t n = 0; n <= N; ++n) {
        h[n] = Complex{box(rng), box(rng)};
        g[n] = n == 0 ? Complex{} : Complex{box(rng), box(rng)};
    }
    return HarmonicMap(std::move(h), std::move(g), "random " + std::to_string(index));
}

}  // namespace detail

inline void write_checks_csv(std::ostream& os, const std::vector<SuiteResult>& suites) {
    os << "suite,check,value,expected,margin,passed\n";
    for (const auto& s : suites) {
        for (const auto& c : s.checks) {
            os << s.suite << ",\"" << c.name << "\"," << detail::fmt_g10(c.value) << ','
               << detail::fmt_g10(c.expected) << ',' << detail::fmt_g10(c.margin) << ','
               << (c.passed ? "true" : "false") << '\n';
        }
    }
}

/// Every table value against the printed one: the 4-decimal rounding must
/// match and the raw value must lie within 1e-4.
inline SuiteResult verify_tables() {
    SuiteResult out{"tables", {}};
    for (int which : {1, 2}) {
        const auto ours = compute_table(which);
        const auto printed = reference_table(which);
        for (std::size_t c = 0; c < ours.columns.size(); ++c) {
            for (std::size_t r = 0; r < 4; ++r) {
                const double v = ours.columns[c].values[r];
                const double e = printed.columns[c].values[r];
                const double margin = 1e-4 - std::abs(v - e);
                const bool same = format_fixed4(v) == format_fixed4(e);
                out.add("table" + std::to_string(which) + " " + ours.rows[r] + " " +
                            ours.columns[c].header(which),
                        v, e, margin, same && margin >= 0.0);
            }
        }
    }
    return out;
}

/// Improvement chains over K in [1,3], K' in [0,3], Lambda in (1,3], each
/// axis with 10 points: r1 >= 1/(K Lambda + sqrt K') > rho1, sigma1 > R1,
/// r3' > rho2, sigma3' > R2. One check per link with the violation count as
/// value and the smallest relative slack as margin.
inline SuiteResult verify_chains() {
    struct Link {
        const char* name;
        int violations = 0;
        double min_slack = std::numeric_limits<double>::infinity();
    };
    Link links[5] = {{"r1 >= 1/(K Lambda + sqrt K')"}, {"1/(K Lambda + sqrt K') > rho1"}, {"sigma1 > R1"},
                     {"r3' > rho2"}, {"sigma3' > R2"}};
    auto note = [](Link& l, double big, double small, bool strict) {
        // Equality is allowed for the non-strict link up to rounding.
        const double slack = (big - small) / std::abs(big);
        l.min_slack = std::min(l.min_slack, slack);
        const bool ok = strict ? big > small : slack >= -4 * std::numeric_limits<double>::epsilon();
        l.violations += ok ? 0 : 1;
    };
    for (int i = 0; i < 10; ++i) {
        const double K = 1.0 + 2.0 * i / 9.0;
        for (int j = 0; j < 10; ++j) {
            const double Kp = 3.0 * j / 9.0;
            for (int k = 1; k <= 10; ++k) {
                const double L = 1.0 + 0.2 * k;
                const auto r1 = elliptic_radii(K, Kp, L);
                const auto c = prior_radii(PriorVariant::thmC, K, Kp, L);
                const auto r3 = quasiregular_jacobian_radii(K, L);
                const auto d = prior_radii(PriorVariant::thmD, K, 0.0, L);
                const double mid = 1.0 / (K * L + std::sqrt(Kp));
                note(links[0], r1.univalence_radius, mid, false);
                note(links[1], mid, c.univalence_radius, true);
                note(links[2], *r1.schlicht_radius, *c.schlicht_radius, true);
                note(links[3], r3.univalence_radius, d.univalence_radius, true);
                note(links[4], *r3.schlicht_radius, *d.schlicht_radius, true);
            }
        }
    }
    SuiteResult out{"chains", {}};
    for (const auto& l : links) {
        out.add(l.name, l.violations, 0.0, l.min_slack, l.violations == 0);
    }
    return out;
}

/// Reductions that must hold to 1e-14 relative: elliptic at K' = 0 vs the
/// quasiregular radii, the J_f-normalised radii at K = 1, K' = 0 vs the
/// baseline, thm2 at K' = 0 vs cor3, and every bound at K = 1, K' = 0 vs cor4.
inline SuiteResult verify_reductions() {
    constexpr double tol = 1e-14;
    double worst[4] = {0.0, 0.0, 0.0, 0.0};
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); };
    for (int i = 0; i < 10; ++i) {
        const double K = 1.0 + 2.0 * i / 9.0;
        for (int k = 1; k <= 20; ++k) {
            const double L = 1.0 + 0.1 * k;
            const auto e = elliptic_radii(K, 0.0, L);
            const auto q = quasiregular_radii(K, L);
            worst[0] = std::max({worst[0], rel(e.univalence_radius, q.univalence_radius),
                                 rel(*e.schlicht_radius, *q.schlicht_radius)});
            if (i == 0) {
                const auto j = elliptic_jacobian_radii(1.0, 0.0, L);
                const auto a = theorem_a_radii(L);
                worst[1] = std::max({worst[1], rel(j.univalence_radius, a.univalence_radius),
                                     rel(*j.schlicht_radius, *a.schlicht_radius)});
            }
            for (int n = 2; n <= 10; ++n) {
                worst[2] = std::max(worst[2], rel(coefficient_bound(BoundVariant::thm2, K, 0.0, L, n),
                                                  coefficient_bound(BoundVariant::cor3, K, 0.0, L, n)));
                if (i == 0) {
                    const double base = coefficient_bound(BoundVariant::cor4, 1.0, 0.0, L, n);
                    for (auto v : {BoundVariant::thm2, BoundVariant::cor5, BoundVariant::cor3,
                                   BoundVariant::conjecture}) {
                        worst[3] = std::max(worst[3], rel(coefficient_bound(v, 1.0, 0.0, L, n), base));
                    }
                }
            }
        }
    }
    const char* names[4] = {"thm1 at K'=0 equals cor1", "thm3 at K=1,K'=0 equals thmA", "thm2 at K'=0 equals cor3",
                            "all bounds at K=1,K'=0 equal cor4"};
    SuiteResult out{"reductions", {}};
    for (int i = 0; i < 4; ++i) {
        out.add(names[i], worst[i], 0.0, tol - worst[i], worst[i] <= tol);
    }
    return out;
}

/// Sharpness against the designated extremal maps. With `only` set, just that
/// result is checked (with `params`); otherwise every sharp result at M = 2,
/// Lambda = 2, plus the f1 critical radius to 1e-12 and the fn coefficient
/// identity for (Lambda, n) in {1.5, 2, 3} x {2, 3, 5}.
inline SuiteResult verify_sharpness(std::optional<Theorem> only = std::nullopt, ClassParams params = {}) {
    SuiteResult out{"sharpness", {}};
    auto run = [&](Theorem t, const ClassParams& p) {
        const auto rep = sharpness_report(t, p);
        const std::string tag(to_string(t));
        out.add(tag + " critical radius vs formula radius", rep.critical.value_or(NAN), rep.formula_radius,
                kSharpRadiusTolerance - rep.radius_delta, rep.radius_delta < kSharpRadiusTolerance);
        if (rep.formula_schlicht) {
            const double v = *rep.oracle_schlicht;
            const double e = *rep.formula_schlicht;
            if (rep.schlicht_claimed_sharp) {
                out.add(tag + " boundary minimum vs schlicht radius", v, e,
                        kSharpSchlichtTolerance - *rep.schlicht_delta, *rep.schlicht_delta < kSharpSchlichtTolerance);
            } else {
                out.add(tag + " boundary minimum >= schlicht radius", v, e, v - e + kSharpSchlichtTolerance,
                        v >= e - kSharpSchlichtTolerance);
            }
        }
    };
    if (only) {
        run(*only, params);
        return out;
    }
    ClassParams p;
    p.M = 2.0;
    p.LambdaBig = 2.0;
    for (auto t : {Theorem::thmA, Theorem::thm1, Theorem::cor1, Theorem::cor2, Theorem::thm11, Theorem::thm12,
                   Theorem::thm0, Theorem::thm10}) {
        run(t, p);
    }
    const auto f1_crit = critical_radius(ExtremalSpec::f1(2.0));
    const double c = f1_crit.value_or(NAN);
    out.add_close("f1 Lambda=2 critical radius", c, 0.5, 1e-12);
    out.checks.back().passed = f1_crit && std::abs(c - 0.5) < 1e-12;

    for (double L : {1.5, 2.0, 3.0}) {
        for (int n : {2, 3, 5}) {
            const auto f = build_extremal(ExtremalSpec::fn(L, n));
            const auto idx = static_cast<std::size_t>(n);
            const double v = std::abs(f.h()[idx]) + std::abs(f.g()[idx]);
            const double e = coefficient_bound(BoundVariant::cor4, 1.0, 0.0, L, n);
            out.add(detail::fmt_params("fn coefficient equals cor4 bound Lambda=%g n=%g", L, n), v, e, 0.0, v == e);
        }
    }
    return out;
}

/// Univalence brackets of f0 (M = 2) and f1 (Lambda = 2) must contain the
/// sharp radii. Default grid 512 x 512, 40 bisection steps.
inline SuiteResult verify_oracle(OracleConfig cfg = {}) {
    SuiteResult out{"oracle", {}};
    auto bracket = [&](const char* name, const HarmonicMap& f, double target) {
        const auto b = univalence_radius_search(f, cfg);
        const double margin = std::min(target - b.lo, b.hi - target);
        out.add(std::string(name) + " bracket [" + detail::fmt_g10(b.lo) + ", " + detail::fmt_g10(b.hi) + "]",
                0.5 * (b.lo + b.hi), target, margin, b.lo <= target && target <= b.hi);
    };
    bracket("f0 M=2", build_extremal(ExtremalSpec::f0(2.0)), landau_classical(2.0).univalence_radius);
    bracket("f1 Lambda=2", build_extremal(ExtremalSpec::f1(2.0)), 0.5);
    return out;
}

/// Default oracle configuration used by the acceptance runs.
inline OracleConfig acceptance_oracle_config() {
    OracleConfig cfg;
    cfg.grid = GridSpec{512, 512, 0.9};
    cfg.bisection_steps = 40;
    return cfg;
}

/// Parseval identity on 20 seeded random maps with m = 4(N+1).
inline SuiteResult verify_parseval(std::uint64_t seed = 42, int maps = 20) {
    SuiteResult out{"parseval", {}};
    for (int i = 0; i < maps; ++i) {
        const auto f = detail::random_test_map(seed, static_cast<std::size_t>(i));
        const int m = 4 * (static_cast<int>(f.degree()) + 1);
        const auto p = parseval_mean(f, 0.5, m);
        out.add_close("map " + std::to_string(i) + " N=" + std::to_string(f.degree()), p.integral, p.series_sum,
                      1e-10);
        out.checks.back().passed = std::abs(p.integral - p.series_sum) < 1e-10;
    }
    return out;
}

/// evaluate -> extract_coefficients at r = 0.5 on 20 seeded random maps.
inline SuiteResult verify_roundtrip(std::uint64_t seed = 42, int maps = 20) {
    SuiteResult out{"roundtrip", {}};
    for (int i = 0; i < maps; ++i) {
        const auto f = detail::random_test_map(seed, static_cast<std::size_t>(i));
        const int N = static_cast<int>(f.degree());
        const auto got = extract_coefficients(f, 0.5, N);
        double err = std::abs(got.a[0] - (f.h()[0] + std::conj(f.g()[0])));
        for (std::size_t n = 1; n <= f.degree(); ++n) {
            err = std::max({err, std::abs(got.a[n] - f.h()[n]), std::abs(got.b[n] - f.g()[n])});
        }
        out.add("map " + std::to_string(i) + " N=" + std::to_string(N) + " max coefficient error", err, 0.0,
                1e-9 - err, err < 1e-9);
    }
    return out;
}

/// Lemma G on `samples` midpoints of (0, 1), Lemma H on `samples` evenly
/// spaced points of [1, 100], and the H margin at x = 1 against
/// 1/3 - 1 + ln 2 within 1e-7.
inline SuiteResult verify_lemmas(int samples = 10000) {
    detail::require(samples >= 2, "samples >= 2", "verify lemmas");
    double min_g = std::numeric_limits<double>::infinity();
    double min_h = min_g;
    for (int i = 0; i < samples; ++i) {
        min_g = std::min(min_g, lemma_inequality_margin(Lemma::G, (i + 0.5) / samples));
        min_h = std::min(min_h, lemma_inequality_margin(Lemma::H, 1.0 + 99.0 * i / (samples - 1)));
    }
    SuiteResult out{"lemmas", {}};
    out.add("lemma G minimum margin on (0,1)", min_g, 0.0, min_g, min_g > 0.0);
    out.add("lemma H minimum margin on [1,100]", min_h, 0.0, min_h, min_h > 0.0);
    out.add_close("lemma H margin at x=1", lemma_inequality_margin(Lemma::H, 1.0),
                  1.0 / 3.0 - 1.0 + std::numbers::ln2, 1e-7);
    return out;
}

/// Hypothesis checkers on their extremal maps and on a map built to fail.
inline SuiteResult verify_hypotheses(OracleConfig cfg = {}) {
    SuiteResult out{"hypotheses", {}};
    const auto f0 = build_extremal(ExtremalSpec::f0(2.0));
    const auto f1 = build_extremal(ExtremalSpec::f1(2.0));
    ClassParams pm;
    pm.M = 2.0;
    ClassParams pl;
    pl.LambdaBig = 2.0;

    const auto thm0 = hypothesis_check(HypothesisVariant::thm0, f0, pm, cfg);
    out.add("thm0 on f0 M=2 holds", thm0.margin, 0.0, thm0.margin, thm0.verdict == Verdict::holds);
    const bool real_axis = thm0.worst_point && thm0.worst_point->imag() == 0.0 && thm0.worst_point->real() > 0.0;
    out.add("thm0 on f0 M=2 worst margin is zero on the real axis", thm0.margin, 0.0,
            1e-12 - std::abs(thm0.margin), real_axis && std::abs(thm0.margin) <= 1e-12);

    const auto thmB = hypothesis_check(HypothesisVariant::thmB, f0, pm, cfg);
    out.add("thmB on f0 M=2 holds", thmB.margin, 0.0, thmB.margin, thmB.verdict == Verdict::holds);

    const auto thm10 = hypothesis_check(HypothesisVariant::thm10, f1, pl, cfg);
    out.add("thm10 on f1 Lambda=2 holds", thm10.margin, 0.0, thm10.margin, thm10.verdict == Verdict::holds);

    const HarmonicMap corrupted(PowerSeries{0.0, 1.0, 0.1}, PowerSeries{0.0, 0.0, 0.1}, "corrupted");
    const auto bad = hypothesis_check(HypothesisVariant::thm10, corrupted, pl, cfg);
    const bool flagged =
        bad.verdict == Verdict::violated && bad.witness && bad.witness->index && *bad.witness->index == 2;
    out.add("thm10 flags a2*b2 != 0 with witness n=2", bad.witness && bad.witness->index ? *bad.witness->index : -1,
            2.0, 0.0, flagged);

    const auto cauchy = distortion_growth_check(GrowthVariant::cauchy_bounded, f0, pm, cfg);
    out.add("Cauchy bound on f0 M=2 holds", cauchy.margin, 0.0, cauchy.margin, cauchy.verdict == Verdict::holds);
    return out;
}

/// Conjecture scan evidence. Fails only if a class member exceeds the proven
/// bound (an oracle defect) or the Fn witness misses the conjectured value;
/// values above the conjectured bound are reported, not failed.
inline SuiteResult verify_conjecture(double K, double LambdaBig, int n, const OracleConfig& cfg) {
    const auto rep = conjecture_scan(K, LambdaBig, n, cfg);
    SuiteResult out{"conjecture", {}};
    out.add("max observed vs proven bound", rep.max_observed, rep.proven_bound,
            rep.proven_bound + detail::kScanTolerance - rep.max_observed, rep.proven_violations.empty());
    out.add("Fn witness attains conjectured bound", rep.witness_value, rep.conjectured_bound, 0.0,
            rep.witness_value == rep.conjectured_bound);
    out.add("samples above conjectured bound (report only)", static_cast<double>(rep.counterexamples.size()), 0.0,
            0.0, true);
    out.add("accepted samples (report only)", rep.accepted, rep.samples, 0.0, true);
    return out;
}

}  // namespace landau
