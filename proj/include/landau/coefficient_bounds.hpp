#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "landau/errors.hpp"

namespace landau {

/// Which coefficient estimate to evaluate.
///   thm2       (K,K')-elliptic, J_f(0) = 1
///   cor5       (K,K')-elliptic, lambda_f(0) = 1
///   cor3       K-quasiregular, J_f(0) = 1
///   cor4       K-quasiregular, lambda_f(0) = 1
///   conjecture conjectured sharp bound K (Lambda^2 - 1)/(n Lambda)
enum class BoundVariant { thm2, cor5, cor3, cor4, conjecture };

inline std::string_view to_string(BoundVariant v) {
    switch (v) {
        case BoundVariant::thm2: return "thm2";
        case BoundVariant::cor5: return "cor5";
        case BoundVariant::cor3: return "cor3";
        case BoundVariant::cor4: return "cor4";
        case BoundVariant::conjecture: return "conjecture";
    }
    return "?";
}

inline std::optional<BoundVariant> parse_bound_variant(std::string_view s) {
    for (auto v : {BoundVariant::thm2, BoundVariant::cor5, BoundVariant::cor3, BoundVariant::cor4,
                   BoundVariant::conjecture}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    return std::nullopt;
}

namespace detail {

inline void validate_bound_params(BoundVariant v, double K, double Kp, const std::string& ctx) {
    require(std::isfinite(K) && std::isfinite(Kp), "finite K and K'", ctx);
    require(K >= 1.0, "K >= 1", ctx);
    require(Kp >= 0.0, "K' >= 0", ctx);
    if (v == BoundVariant::cor3 || v == BoundVariant::cor4 || v == BoundVariant::conjecture) {
        require(Kp == 0.0, "K' = 0 (quasiregular class)", ctx);
    }
}

}  // namespace detail

/// Upper bound on |a_n| + |b_n| for n >= 2.
inline double coefficient_bound(BoundVariant v, double K, double Kp, double LambdaBig, int n) {
    const std::string ctx(to_string(v));
    detail::validate_bound_params(v, K, Kp, ctx);
    detail::require(n >= 2, "n >= 2", ctx);
    detail::require(std::isfinite(LambdaBig) && LambdaBig > 0.0, "Lambda > 0", ctx);

    const double L = LambdaBig;
    const double c = K * L + std::sqrt(K * L * K * L + 4.0 * Kp);
    double bound = 0.0;
    switch (v) {
        case BoundVariant::thm2:
            bound = ((K + Kp) * c * c - 4.0) / (2.0 * n * (K + Kp) * c);
            break;
        case BoundVariant::cor5:
            bound = (c * c - 4.0) / (2.0 * n * c);
            break;
        case BoundVariant::cor3:
            bound = (K * K * K * L * L - 1.0) / (n * L * K * K);
            break;
        case BoundVariant::cor4:
            bound = (K * K * L * L - 1.0) / (n * L * K);
            break;
        case BoundVariant::conjecture:
            bound = K * (L * L - 1.0) / (n * L);
            break;
    }
    detail::require(bound > 0.0, "Lambda large enough for a positive bound", ctx);
    return bound;
}

/// Bounds (lo, hi) on |a_1| + |b_1|. The conjecture has no first-coefficient
/// statement of its own and is rejected.
inline std::pair<double, double> first_coefficient_interval(BoundVariant v, double K, double Kp) {
    const std::string ctx(to_string(v));
    detail::validate_bound_params(v, K, Kp, ctx);
    switch (v) {
        case BoundVariant::thm2: {
            const double s = std::sqrt(K + Kp);
            return {1.0 / s, s};
        }
        case BoundVariant::cor5:
            return {1.0, (K + std::sqrt(K * K + 4.0 * Kp)) / 2.0};
        case BoundVariant::cor3: {
            const double s = std::sqrt(K);
            return {1.0 / s, s};
        }
        case BoundVariant::cor4:
            return {1.0, K};
        case BoundVariant::conjecture:
            break;
    }
    throw admissibility_error("conjecture: no first-coefficient interval");
}

}  // namespace landau
