#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "landau/oracle_config.hpp"
#include "landau/radii.hpp"

namespace landau {

enum class HypothesisVariant { thmB, thm0, thm10 };

inline std::string_view to_string(HypothesisVariant v) {
    switch (v) {
        case HypothesisVariant::thmB: return "thmB";
        case HypothesisVariant::thm0: return "thm0";
        case HypothesisVariant::thm10: return "thm10";
    }
    return "?";
}

namespace detail {

/// Relative slack for equality cases (the extremal maps attain the bounds).
inline constexpr double kHypothesisSlack = 1e-12;

/// (M^2 - 1)(2 M r - r^2) / (M - r)^2
inline double landau_derivative_bound(double M, double r) {
    return (M * M - 1.0) * (2.0 * M * r - r * r) / ((M - r) * (M - r));
}

struct MarginTracker {
    OracleReport& report;

    void observe(double margin, double scale, Complex where, std::string_view kind) {
        if (margin < report.margin) {
            report.margin = margin;
            report.worst_point = where;
        }
        if (margin < -kHypothesisSlack * std::max(1.0, scale) && !report.witness) {
            report.verdict = Verdict::violated;
            report.witness = Witness{std::string(kind), where, std::nullopt, std::nullopt, margin};
        }
    }
};

inline void check_normalization(const HarmonicMap& f, OracleReport& report) {
    const double lam0 = f.lambda_at_origin();
    if (std::abs(lam0 - 1.0) > 1e-12 && !report.witness) {
        report.verdict = Verdict::violated;
        report.witness = Witness{"normalization lambda_f(0) != 1", Complex{}, std::nullopt, std::nullopt, lam0};
    }
}

}  // namespace detail

/// Tests a map against the hypotheses of three sufficient conditions:
///   thmB   sum_{n>=2} n (|a_n| + |b_n|) r^{n-1} <= (M^2-1)(2Mr - r^2)/(M-r)^2
///          at radial_steps+1 radii spanning [0, rho_0]
///   thm0   |h'(z) - h'(0)| + |g'(z) - g'(0)| <= same bound in |z|, on a polar
///          grid strictly inside |z| < rho_0
///   thm10  |z f_z + conj(z) f_zbar| < Lambda on cfg.grid, and a_n b_n = 0
///          (|a_n b_n| <= 1e-14) for 2 <= n <= N
/// All three also require lambda_f(0) = 1. Margins are bound minus value.
inline OracleReport hypothesis_check(HypothesisVariant variant, const HarmonicMap& f, const ClassParams& params,
                                     const OracleConfig& cfg) {
    cfg.validate();
    const std::string ctx(to_string(variant));
    if (!f.normalized()) {
        throw admissibility_error(ctx + ": requires f(0) = 0");
    }
    OracleReport report;
    report.config = cfg;
    detail::MarginTracker track{report};
    const auto& grid = cfg.grid;

    switch (variant) {
        case HypothesisVariant::thmB: {
            const double M = params.require_M(ctx);
            detail::require(M > 1.0, "M > 1", ctx);
            const double rho0 = landau_classical(M).univalence_radius;
            for (int i = 0; i <= grid.radial_steps; ++i) {
                const double r = rho0 * i / grid.radial_steps;
                double lhs = 0.0;
                double rp = 1.0;
                for (std::size_t n = 2; n <= f.degree(); ++n) {
                    rp *= r;
                    lhs += static_cast<double>(n) * (std::abs(f.h()[n]) + std::abs(f.g()[n])) * rp;
                }
                const double rhs = detail::landau_derivative_bound(M, r);
                track.observe(rhs - lhs, rhs, Complex{r, 0.0}, "coefficient-sum bound");
            }
            break;
        }
        case HypothesisVariant::thm0: {
            const double M = params.require_M(ctx);
            detail::require(M > 1.0, "M > 1", ctx);
            const double rho0 = landau_classical(M).univalence_radius;
            const Complex dh0 = f.dh().horner(Complex{});
            const Complex dg0 = f.dg().horner(Complex{});
            const int R = grid.radial_steps;
            const int A = grid.angular_steps;
            std::vector<double> margins(static_cast<std::size_t>(R) * A);
            std::vector<double> scales(margins.size());
            std::vector<Complex> points(margins.size());
            detail::parallel_for(margins.size(), [&](std::size_t i) {
                const int j = static_cast<int>(i / A) + 1;
                const int k = static_cast<int>(i % A);
                const double r = rho0 * j / (R + 1);
                const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / A);
                const double lhs = std::abs(f.dh().horner(z) - dh0) + std::abs(f.dg().horner(z) - dg0);
                const double rhs = detail::landau_derivative_bound(M, r);
                points[i] = z;
                margins[i] = rhs - lhs;
                scales[i] = rhs;
            });
            track.observe(detail::landau_derivative_bound(M, 0.0), 0.0, Complex{}, "derivative-difference bound");
            for (std::size_t i = 0; i < margins.size(); ++i) {
                track.observe(margins[i], scales[i], points[i], "derivative-difference bound");
            }
            break;
        }
        case HypothesisVariant::thm10: {
            const double L = params.require_LambdaBig(ctx);
            detail::require(L >= 1.0, "Lambda >= 1", ctx);
            std::vector<double> radial(grid.size());
            detail::parallel_for(radial.size(), [&](std::size_t i) {
                const Complex z = grid.point(i);
                radial[i] = std::abs(z * f.dh().horner(z) + std::conj(z * f.dg().horner(z)));
            });
            for (std::size_t i = 0; i < radial.size(); ++i) {
                track.observe(L - radial[i], L, grid.point(i), "radial-derivative bound");
            }
            for (std::size_t n = 2; n <= f.degree(); ++n) {
                const double product = std::abs(f.h()[n] * f.g()[n]);
                if (product > 1e-14 && !report.witness) {
                    report.verdict = Verdict::violated;
                    report.witness = Witness{"coefficient overlap a_n b_n != 0", std::nullopt, std::nullopt,
                                             static_cast<int>(n), product};
                }
            }
            break;
        }
    }
    detail::check_normalization(f, report);
    return report;
}

enum class GrowthVariant { schwarz_sp, cauchy_bounded };

inline std::string_view to_string(GrowthVariant v) {
    return v == GrowthVariant::schwarz_sp ? "schwarz_sp" : "cauchy_bounded";
}

/// Pointwise growth bounds on cfg.grid:
///   schwarz_sp      |g'| <= |z| |h'| and Lambda_f <= lambda (1+|z|)/(1-|z|);
///                   needs params.lambdaSmall and g'(0) = 0
///   cauchy_bounded  |h'(z)| <= M / (1 - |z|); needs params.M
/// If the map fails the class hypotheses on the grid (sense-preserving and
/// lambda_f <= lambda, or |h| <= M) the verdict is inconclusive.
inline OracleReport distortion_growth_check(GrowthVariant variant, const HarmonicMap& f, const ClassParams& params,
                                            const OracleConfig& cfg) {
    cfg.validate();
    const std::string ctx(to_string(variant));
    OracleReport report;
    report.config = cfg;
    detail::MarginTracker track{report};
    const auto& grid = cfg.grid;
    const std::size_t count = grid.size();

    struct Point {
        Complex z;
        Complex h;
        Complex dh;
        Complex dg;
    };
    std::vector<Point> pts(count);
    detail::parallel_for(count, [&](std::size_t i) {
        const Complex z = grid.point(i);
        pts[i] = {z, f.h().horner(z), f.dh().horner(z), f.dg().horner(z)};
    });

    std::optional<Witness> hypothesis_failure;
    if (variant == GrowthVariant::schwarz_sp) {
        const double lam = params.require_lambdaSmall(ctx);
        if (std::abs(f.dg().horner(Complex{})) > 1e-14) {
            throw admissibility_error(ctx + ": requires g'(0) = 0");
        }
        for (const auto& p : pts) {
            const double a = std::abs(p.dh);
            const double b = std::abs(p.dg);
            const double r = std::abs(p.z);
            if (!hypothesis_failure && (a <= b || a - b > lam * (1.0 + detail::kHypothesisSlack))) {
                hypothesis_failure =
                    Witness{a <= b ? "not sense-preserving" : "lambda_f > lambda", p.z, std::nullopt, std::nullopt, a - b};
            }
            track.observe(r * a - b, r * a, p.z, "dilatation bound |g'| <= |z||h'|");
            const double bound = lam * (1.0 + r) / (1.0 - r);
            track.observe(bound - (a + b), bound, p.z, "growth bound Lambda_f <= lambda(1+|z|)/(1-|z|)");
        }
    } else {
        const double M = params.require_M(ctx);
        detail::require(M > 0.0, "M > 0", ctx);
        for (const auto& p : pts) {
            if (!hypothesis_failure && std::abs(p.h) > M * (1.0 + detail::kHypothesisSlack)) {
                hypothesis_failure = Witness{"|h| > M", p.z, std::nullopt, std::nullopt, std::abs(p.h)};
            }
            const double bound = M / (1.0 - std::abs(p.z));
            track.observe(bound - std::abs(p.dh), bound, p.z, "Cauchy bound |h'| <= M/(1-|z|)");
        }
    }

    if (hypothesis_failure) {
        report.verdict = Verdict::inconclusive;
        report.witness = hypothesis_failure;
    }
    return report;
}

}  // namespace landau
