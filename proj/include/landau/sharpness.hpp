#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "landau/extremal.hpp"
#include "landau/params.hpp"
#include "landau/radii.hpp"
#include "landau/univalence.hpp"

namespace landau {

/// Comparison of a theorem's radii with its extremal map.
struct SharpnessReport {
    Theorem theorem = Theorem::thmA;
    std::string extremal;             ///< label of the extremal map
    double formula_radius = 0.0;
    std::optional<double> critical;   ///< zero of the extremal's h' on (0, 1)
    double radius_delta = 0.0;        ///< |critical - formula_radius|
    std::optional<double> formula_schlicht;
    std::optional<double> oracle_schlicht;  ///< boundary minimum of |f| at formula_radius
    std::optional<double> schlicht_delta;   ///< |oracle - formula| when both exist
    /// The result claims its schlicht radius is attained; otherwise the
    /// oracle value need only be >= the formula value.
    bool schlicht_claimed_sharp = false;
    bool passed = false;
};

inline constexpr double kSharpRadiusTolerance = 1e-10;
inline constexpr double kSharpSchlichtTolerance = 1e-8;

namespace detail {

/// Truncation degree making the tail of a series with coefficient ratio
/// 1/`ratio`, evaluated at radius r, fall below 1e-17.
inline int sharpness_degree(double ratio, double r) {
    const double decay = std::log(ratio / r);
    const double needed = 17.0 * std::log(10.0) / decay;
    return static_cast<int>(std::min(200000.0, std::ceil(needed))) + 16;
}

}  // namespace detail

/// Builds the designated extremal map for `theorem` and compares the formula
/// radii with its critical radius and boundary-minimum schlicht radius.
///   thmA, thm12        f1, needs Lambda > 1
///   thm1, cor1, cor2   f1, only at K = 1 (and K' = 0 for thm1)
///   thm11, thmB, thm0  f0, needs M > 1
///   thm10              f1, needs Lambda > 1 (the schlicht radius is only
///                      claimed sharp at Lambda = 1, with f(z) = z)
/// Passes when |radius_delta| < 1e-10 and, for claimed-sharp schlicht radii,
/// |schlicht_delta| < 1e-8; otherwise the oracle schlicht radius must not
/// fall below the formula value by more than 1e-8.
inline SharpnessReport sharpness_report(Theorem theorem, const ClassParams& params) {
    params.validate_base("sharpness");
    const std::string ctx = "sharpness " + std::string(to_string(theorem));
    SharpnessReport out;
    out.theorem = theorem;

    std::optional<ExtremalSpec> spec;
    RadiusPair radii;
    switch (theorem) {
        case Theorem::thm1:
            detail::require(params.K == 1.0 && params.Kp == 0.0, "K = 1 and K' = 0 for a sharp case", ctx);
            [[fallthrough]];
        case Theorem::cor1:
        case Theorem::cor2:
            detail::require(params.K == 1.0, "K = 1 for a sharp case", ctx);
            [[fallthrough]];
        case Theorem::thmA:
        case Theorem::thm12:
        case Theorem::thm10: {
            const double L = params.require_LambdaBig(ctx);
            detail::require(L > 1.0, "Lambda > 1", ctx);
            switch (theorem) {
                case Theorem::thm1: radii = elliptic_radii(1.0, 0.0, L); break;
                case Theorem::cor1: radii = quasiregular_radii(1.0, L); break;
                case Theorem::cor2: radii = quasiregular_jacobian_radii(1.0, L); break;
                case Theorem::thm12: radii = sp_univalence_radius(SpVariant::thm12_boundedHprime, L); break;
                case Theorem::thm10: radii = sp_univalence_radius(SpVariant::thm10_radial, L); break;
                default: radii = theorem_a_radii(L); break;
            }
            out.schlicht_claimed_sharp = theorem != Theorem::thm10;
            spec = ExtremalSpec::f1(L, detail::sharpness_degree(L, 1.0 / L));
            break;
        }
        case Theorem::thm11:
        case Theorem::thmB:
        case Theorem::thm0: {
            const double M = params.require_M(ctx);
            detail::require(M > 1.0, "M > 1", ctx);
            radii = sp_univalence_radius(
                theorem == Theorem::thm11 ? SpVariant::thm11_boundedH : SpVariant::thm0_sharp, M);
            radii.source = theorem;
            out.schlicht_claimed_sharp = theorem != Theorem::thm11;
            spec = ExtremalSpec::f0(M, detail::sharpness_degree(M, radii.univalence_radius));
            break;
        }
        default:
            throw admissibility_error(ctx + ": no extremal map is designated for this result");
    }

    const auto f = build_extremal(*spec);
    out.extremal = f.label();
    out.formula_radius = radii.univalence_radius;
    out.critical = critical_radius(*spec);
    out.radius_delta = out.critical ? std::abs(*out.critical - out.formula_radius)
                                    : std::numeric_limits<double>::infinity();
    out.formula_schlicht = radii.schlicht_radius;

    bool schlicht_ok = true;
    if (radii.schlicht_radius) {
        out.oracle_schlicht = schlicht_radius(f, out.formula_radius, 4096);
        out.schlicht_delta = std::abs(*out.oracle_schlicht - *radii.schlicht_radius);
        schlicht_ok = out.schlicht_claimed_sharp
                          ? *out.schlicht_delta < kSharpSchlichtTolerance
                          : *out.oracle_schlicht >= *radii.schlicht_radius - kSharpSchlichtTolerance;
    } else {
        out.schlicht_claimed_sharp = false;
    }
    out.passed = out.radius_delta < kSharpRadiusTolerance && schlicht_ok;
    return out;
}

}  // namespace landau
