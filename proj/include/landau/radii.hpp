#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "landau/errors.hpp"

namespace landau {

/// Identifies which result a radius (or bound) comes from. The short tags
/// are the names used on the command line.
enum class Theorem {
    landau,  ///< classical Landau theorem for bounded holomorphic maps
    thmA,    ///< harmonic, lambda_f(0) = 1, Lambda_f < Lambda (sharp baseline)
    thmB,    ///< coefficient-sum hypothesis with bound M
    thmC,    ///< prior elliptic result, lambda_f(0) = 1
    thmD,    ///< prior quasiregular result, J_f(0) = 1
    thm1,    ///< (K,K')-elliptic, lambda_f(0) = 1
    cor1,    ///< K-quasiregular, lambda_f(0) = 1
    thm3,    ///< (K,K')-elliptic, J_f(0) = 1
    cor2,    ///< K-quasiregular, J_f(0) = 1
    thm6,    ///< sense-preserving, h'(0) = 1, g'(0) = 0, lambda_f <= lambda
    thm7,    ///< K-quasiregular with |h| <= M
    thm11,   ///< sense-preserving with |h| <= M
    thm12,   ///< sense-preserving with |h'| < Lambda
    thm0,    ///< derivative-difference hypothesis with bound M
    thm10,   ///< radial-derivative bound with disjoint coefficients
};

inline std::string_view to_string(Theorem t) {
    switch (t) {
        case Theorem::landau: return "landau";
        case Theorem::thmA: return "thmA";
        case Theorem::thmB: return "thmB";
        case Theorem::thmC: return "thmC";
        case Theorem::thmD: return "thmD";
        case Theorem::thm1: return "thm1";
        case Theorem::cor1: return "cor1";
        case Theorem::thm3: return "thm3";
        case Theorem::cor2: return "cor2";
        case Theorem::thm6: return "thm6";
        case Theorem::thm7: return "thm7";
        case Theorem::thm11: return "thm11";
        case Theorem::thm12: return "thm12";
        case Theorem::thm0: return "thm0";
        case Theorem::thm10: return "thm10";
    }
    return "?";
}

inline std::optional<Theorem> parse_theorem(std::string_view s) {
    for (auto t : {Theorem::landau, Theorem::thmA, Theorem::thmB, Theorem::thmC, Theorem::thmD,
                   Theorem::thm1, Theorem::cor1, Theorem::thm3, Theorem::cor2, Theorem::thm6,
                   Theorem::thm7, Theorem::thm11, Theorem::thm12, Theorem::thm0, Theorem::thm10}) {
        if (to_string(t) == s) {
            return t;
        }
    }
    return std::nullopt;
}

/// Univalence radius and, when the result asserts one, the schlicht radius.
struct RadiusPair {
    double univalence_radius = 0.0;
    std::optional<double> schlicht_radius;
    Theorem source = Theorem::thmA;
};

namespace detail {

/// a + (a^3 - a) ln(1 - 1/a^2) for a >= 1, the schlicht radius attached to
/// a Lambda_f < a bound. With u = 1/a^2 this equals
/// a * sum_{k>=1} u^k / (k (k+1)); the series is used for small u where
/// the closed form cancels. Equals 1 at a = 1 (0 ln 0 = 0).
inline double theorem_a_schlicht(double a) {
    if (a == 1.0) {
        return 1.0;
    }
    const double u = 1.0 / (a * a);
    double inner = 0.0;
    if (u <= 0.5) {
        double uk = u;
        for (int k = 1; k < 200; ++k) {
            const double term = uk / (static_cast<double>(k) * (k + 1));
            inner += term;
            if (term < 1e-18 * inner) {
                break;
            }
            uk *= u;
        }
    } else {
        inner = 1.0 + (a * a - 1.0) * std::log1p(-u);
    }
    return a * inner;
}

inline void require_finite(double x, const char* name, const std::string& context) {
    if (!std::isfinite(x)) {
        throw admissibility_error(context + ": " + name + " must be finite");
    }
}

}  // namespace detail

/// rho_0 = M - sqrt(M^2 - 1), R_0 = M rho_0^2. M = 1 is the limit (1, 1).
inline RadiusPair landau_classical(double M) {
    detail::require_finite(M, "M", "landau");
    detail::require(M >= 1.0, "M >= 1", "landau");
    const double rho = 1.0 / (M + std::sqrt(M * M - 1.0));
    return {rho, M * rho * rho, Theorem::landau};
}

/// r = 1/Lambda, R = Lambda + (Lambda^3 - Lambda) ln(1 - 1/Lambda^2).
inline RadiusPair theorem_a_radii(double LambdaBig) {
    detail::require_finite(LambdaBig, "Lambda", "thmA");
    detail::require(LambdaBig >= 1.0, "Lambda >= 1", "thmA");
    return {1.0 / LambdaBig, detail::theorem_a_schlicht(LambdaBig), Theorem::thmA};
}

namespace detail {

/// (K Lambda + sqrt(K^2 Lambda^2 + 4K')) / 2, the bound on Lambda_f implied
/// by the elliptic inequality and lambda_f < Lambda.
inline double elliptic_distortion_bound(double K, double Kp, double LambdaBig) {
    const double a = K * LambdaBig;
    return (a + std::sqrt(a * a + 4.0 * Kp)) / 2.0;
}

inline void validate_k(double K, double Kp, const std::string& context) {
    require_finite(K, "K", context);
    require_finite(Kp, "K'", context);
    require(K >= 1.0, "K >= 1", context);
    require(Kp >= 0.0, "K' >= 0", context);
}

}  // namespace detail

/// (K,K')-elliptic maps with lambda_f(0) = 1 and lambda_f < Lambda:
/// r_1 = 2 / (K Lambda + sqrt(K^2 Lambda^2 + 4K')), sigma_1 the Theorem-A
/// schlicht radius at 1/r_1.
inline RadiusPair elliptic_radii(double K, double Kp, double LambdaBig) {
    detail::validate_k(K, Kp, "thm1");
    detail::require_finite(LambdaBig, "Lambda", "thm1");
    detail::require(LambdaBig > 1.0, "Lambda > 1", "thm1");
    const double bound = detail::elliptic_distortion_bound(K, Kp, LambdaBig);
    return {1.0 / bound, detail::theorem_a_schlicht(bound), Theorem::thm1};
}

/// K-quasiregular, lambda_f(0) = 1: r_2 = 1/(K Lambda),
/// sigma_2 = K Lambda + (K^3 Lambda^3 - K Lambda) ln(1 - 1/(K^2 Lambda^2)).
inline RadiusPair quasiregular_radii(double K, double LambdaBig) {
    detail::validate_k(K, 0.0, "cor1");
    detail::require_finite(LambdaBig, "Lambda", "cor1");
    detail::require(LambdaBig > 1.0, "Lambda > 1", "cor1");
    const double a = K * LambdaBig;
    return {1.0 / a, detail::theorem_a_schlicht(a), Theorem::cor1};
}

/// (K,K')-elliptic maps normalised by J_f(0) = 1. Requires
/// Lambda > 1/sqrt(K+K').
inline RadiusPair elliptic_jacobian_radii(double K, double Kp, double LambdaBig) {
    detail::validate_k(K, Kp, "thm3");
    detail::require_finite(LambdaBig, "Lambda", "thm3");
    const double s = std::sqrt(K + Kp);
    detail::require(LambdaBig * s > 1.0, "Lambda > 1/sqrt(K+K')", "thm3");
    const double bound = s * detail::elliptic_distortion_bound(K, Kp, LambdaBig);
    return {1.0 / bound, detail::theorem_a_schlicht(bound) / s, Theorem::thm3};
}

/// K' = 0 case: r_3' = 1/(K^{3/2} Lambda).
inline RadiusPair quasiregular_jacobian_radii(double K, double LambdaBig) {
    detail::validate_k(K, 0.0, "cor2");
    detail::require_finite(LambdaBig, "Lambda", "cor2");
    detail::require(LambdaBig * std::sqrt(K) > 1.0, "Lambda > 1/sqrt(K)", "cor2");
    auto r = elliptic_jacobian_radii(K, 0.0, LambdaBig);
    r.source = Theorem::cor2;
    return r;
}

enum class PriorVariant { thmC, thmD };

/// Earlier radii these results are compared against.
///   thmC: rho_1 = 1/(1 + K Lambda + sqrt(K')),
///         R_1 = 1 + (K Lambda + sqrt(K')) ln(1 - rho_1)
///   thmD: rho_2 = 1/(1 + K^{3/2} Lambda),
///         R_2 = 1/sqrt(K) + K Lambda ln(1 - rho_2)   (K' ignored)
inline RadiusPair prior_radii(PriorVariant variant, double K, double Kp, double LambdaBig) {
    if (variant == PriorVariant::thmC) {
        detail::validate_k(K, Kp, "thmC");
        detail::require_finite(LambdaBig, "Lambda", "thmC");
        detail::require(LambdaBig > 0.0, "Lambda > 0", "thmC");
        const double b = K * LambdaBig + std::sqrt(Kp);
        const double rho = 1.0 / (1.0 + b);
        return {rho, 1.0 + b * std::log1p(-rho), Theorem::thmC};
    }
    detail::validate_k(K, 0.0, "thmD");
    detail::require_finite(LambdaBig, "Lambda", "thmD");
    detail::require(LambdaBig > 0.0, "Lambda > 0", "thmD");
    const double rho = 1.0 / (1.0 + K * std::sqrt(K) * LambdaBig);
    return {rho, 1.0 / std::sqrt(K) + K * LambdaBig * std::log1p(-rho), Theorem::thmD};
}

/// Sense-preserving maps with h'(0) = 1, g'(0) = 0 and lambda_f <= lambda:
/// r_4 = 1/(2 (sqrt2 + 1) lambda). lambda < 1 is rejected because the
/// hypotheses force lambda >= 1.
inline RadiusPair sp_lambda_radii(double lambdaSmall) {
    detail::require_finite(lambdaSmall, "lambda", "thm6");
    detail::require(lambdaSmall >= 1.0, "lambda >= 1", "thm6");
    constexpr double p = std::numbers::sqrt2 + 1.0;
    const double a = p * lambdaSmall;
    return {1.0 / (2.0 * a), detail::theorem_a_schlicht(a) / 2.0, Theorem::thm6};
}

/// K-quasiregular with |h| <= M: r_7 = (K+1)/(8KM).
inline RadiusPair quasiregular_bounded_radii(double K, double M) {
    detail::validate_k(K, 0.0, "thm7");
    detail::require_finite(M, "M", "thm7");
    detail::require(M > 0.0, "M > 0", "thm7");
    const double c = 4.0 * K * M / (K + 1.0);
    detail::require(c > 1.0, "4KM/(K+1) > 1", "thm7");
    return {(K + 1.0) / (8.0 * K * M), detail::theorem_a_schlicht(c) / 2.0, Theorem::thm7};
}

enum class SpVariant { thm11_boundedH, thm12_boundedHprime, thm0_sharp, thm10_radial };

/// Sharp univalence radii for sense-preserving / coefficient-condition
/// classes. `param` is M for thm11 and thm0, Lambda for thm12 and thm10.
inline RadiusPair sp_univalence_radius(SpVariant variant, double param) {
    switch (variant) {
        case SpVariant::thm11_boundedH: {
            detail::require_finite(param, "M", "thm11");
            detail::require(param > 1.0, "M > 1", "thm11");
            auto r = landau_classical(param);
            return {r.univalence_radius, std::nullopt, Theorem::thm11};
        }
        case SpVariant::thm12_boundedHprime:
            detail::require_finite(param, "Lambda", "thm12");
            detail::require(param > 1.0, "Lambda > 1", "thm12");
            return {1.0 / param, std::nullopt, Theorem::thm12};
        case SpVariant::thm0_sharp: {
            detail::require_finite(param, "M", "thm0");
            detail::require(param > 1.0, "M > 1", "thm0");
            auto r = landau_classical(param);
            r.source = Theorem::thm0;
            return r;
        }
        case SpVariant::thm10_radial:
            detail::require_finite(param, "Lambda", "thm10");
            detail::require(param >= 1.0, "Lambda >= 1", "thm10");
            // Lambda - sqrt(Lambda^2 - 1) in cancellation-free form.
            return {1.0 / param, 1.0 / (param + std::sqrt(param * param - 1.0)), Theorem::thm10};
    }
    throw std::logic_error("unknown variant");
}

}  // namespace landau
