#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "landau/harmonic_map.hpp"
#include "landau/quadrature.hpp"

namespace landau {

/// Extremal families:
///   f0            M z (1 - M z)/(M - z)                       (bounded by M)
///   f1            int_0^z Lambda (1 - Lambda t)/(Lambda - t) dt
///   fn            Lambda^2 z - int_0^z (Lambda^3 - Lambda)/(Lambda + t^{n-1}) dt
///   Fn_conjecture ((K+1)/2) fn + conj(((K-1)/2) fn)
enum class ExtremalKind { f0, f1, fn, Fn_conjecture };

inline std::string_view to_string(ExtremalKind k) {
    switch (k) {
        case ExtremalKind::f0: return "f0";
        case ExtremalKind::f1: return "f1";
        case ExtremalKind::fn: return "fn";
        case ExtremalKind::Fn_conjecture: return "Fn";
    }
    return "?";
}

inline std::optional<ExtremalKind> parse_extremal_kind(std::string_view s) {
    if (s == "f0") return ExtremalKind::f0;
    if (s == "f1") return ExtremalKind::f1;
    if (s == "fn") return ExtremalKind::fn;
    if (s == "Fn" || s == "Fn_conjecture") return ExtremalKind::Fn_conjecture;
    return std::nullopt;
}

struct ExtremalSpec {
    ExtremalKind kind = ExtremalKind::f0;
    double M = 2.0;
    double LambdaBig = 2.0;
    int n = 2;
    double K = 1.0;
    int N = 64;

    static ExtremalSpec f0(double M, int N = 64) { return {ExtremalKind::f0, M, 0.0, 2, 1.0, N}; }
    static ExtremalSpec f1(double LambdaBig, int N = 64) { return {ExtremalKind::f1, 0.0, LambdaBig, 2, 1.0, N}; }
    static ExtremalSpec fn(double LambdaBig, int n, int N = 64) {
        return {ExtremalKind::fn, 0.0, LambdaBig, n, 1.0, N};
    }
    static ExtremalSpec Fn(double K, double LambdaBig, int n, int N = 64) {
        return {ExtremalKind::Fn_conjecture, 0.0, LambdaBig, n, K, N};
    }

    void validate() const {
        const std::string ctx = "extremal " + std::string(to_string(kind));
        detail::require(N >= 1, "N >= 1", ctx);
        switch (kind) {
            case ExtremalKind::f0:
                detail::require(std::isfinite(M) && M > 1.0, "M > 1", ctx);
                break;
            case ExtremalKind::Fn_conjecture:
                detail::require(std::isfinite(K) && K >= 1.0, "K >= 1", ctx);
                [[fallthrough]];
            case ExtremalKind::fn:
                detail::require(n >= 2, "n >= 2", ctx);
                detail::require(N >= n, "N >= n", ctx);
                [[fallthrough]];
            case ExtremalKind::f1:
                detail::require(std::isfinite(LambdaBig) && LambdaBig > 1.0, "Lambda > 1", ctx);
                break;
        }
    }

    /// Truncation degree actually used: fn/Fn are extended so that at least
    /// eight nonzero terms of the z^{k(n-1)+1} expansion are present.
    int effective_degree() const {
        if (kind == ExtremalKind::fn || kind == ExtremalKind::Fn_conjecture) {
            return std::max(N, 8 * (n - 1) + 1);
        }
        return N;
    }

    std::string label() const {
        char buf[128];
        switch (kind) {
            case ExtremalKind::f0: std::snprintf(buf, sizeof buf, "f0 M=%.17g", M); break;
            case ExtremalKind::f1: std::snprintf(buf, sizeof buf, "f1 Lambda=%.17g", LambdaBig); break;
            case ExtremalKind::fn: std::snprintf(buf, sizeof buf, "fn Lambda=%.17g n=%d", LambdaBig, n); break;
            case ExtremalKind::Fn_conjecture:
                std::snprintf(buf, sizeof buf, "Fn K=%.17g Lambda=%.17g n=%d", K, LambdaBig, n);
                break;
        }
        return buf;
    }
};

namespace detail {

inline PowerSeries fn_series(double L, int n, std::size_t degree) {
    PowerSeries h(degree);
    h[1] = 1.0;
    const std::size_t step = static_cast<std::size_t>(n - 1);
    double Lk = 1.0;
    for (std::size_t k = 1; k * step + 1 <= degree; ++k) {
        Lk *= L;
        const std::size_t m = k * step + 1;
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        h[m] = sign * (L * L - 1.0) / (static_cast<double>(m) * Lk);
    }
    return h;
}

/// Taylor coefficients of Lambda (1 - Lambda z)/(Lambda - z) up to `degree`:
/// (1 - Lambda z) times the geometric series of 1/(1 - z/Lambda).
inline PowerSeries f1_integrand_series(double L, std::size_t degree) {
    PowerSeries geometric(degree);
    double p = 1.0;
    for (std::size_t k = 0; k <= degree; ++k) {
        geometric[k] = p;
        p /= L;
    }
    return series_multiply(PowerSeries{1.0, -L}, geometric, degree);
}

}  // namespace detail

inline HarmonicMap build_extremal(const ExtremalSpec& spec) {
    spec.validate();
    const auto degree = static_cast<std::size_t>(spec.effective_degree());
    PowerSeries zero(degree);

    switch (spec.kind) {
        case ExtremalKind::f0: {
            // z - sum_{m>=2} (M^2 - 1)/M^{m-1} z^m
            PowerSeries h(degree);
            h[1] = 1.0;
            const double M = spec.M;
            double Mpow = 1.0;
            for (std::size_t m = 2; m <= degree; ++m) {
                Mpow *= M;
                h[m] = -(M * M - 1.0) / Mpow;
            }
            return HarmonicMap(std::move(h), zero, spec.label());
        }
        case ExtremalKind::f1: {
            auto h = series_antiderivative(detail::f1_integrand_series(spec.LambdaBig, degree - 1));
            return HarmonicMap(std::move(h), zero, spec.label());
        }
        case ExtremalKind::fn:
            return HarmonicMap(detail::fn_series(spec.LambdaBig, spec.n, degree), zero, spec.label());
        case ExtremalKind::Fn_conjecture: {
            const auto base = detail::fn_series(spec.LambdaBig, spec.n, degree);
            return HarmonicMap((spec.K + 1.0) / 2.0 * base, (spec.K - 1.0) / 2.0 * base, spec.label());
        }
    }
    throw std::logic_error("unknown extremal kind");
}

/// Closed-form evaluation: rational for f0, adaptive quadrature of the
/// defining integrand along [0, z] for the integral families.
inline Complex extremal_closed_eval(const ExtremalSpec& spec, Complex z, double abs_tol = 1e-13) {
    spec.validate();
    detail::require_in_disk(z, "extremal_closed_eval");
    const double L = spec.LambdaBig;

    auto fn_value = [&] {
        const int p = spec.n - 1;
        auto integrand = [&](Complex t) { return L * L - (L * L * L - L) / (L + std::pow(t, p)); };
        return integrate_segment(integrand, z, abs_tol).value;
    };

    switch (spec.kind) {
        case ExtremalKind::f0:
            return spec.M * z * (1.0 - spec.M * z) / (spec.M - z);
        case ExtremalKind::f1: {
            auto integrand = [&](Complex t) { return L * (1.0 - L * t) / (L - t); };
            return integrate_segment(integrand, z, abs_tol).value;
        }
        case ExtremalKind::fn:
            return fn_value();
        case ExtremalKind::Fn_conjecture: {
            const Complex v = fn_value();
            return (spec.K + 1.0) / 2.0 * v + std::conj((spec.K - 1.0) / 2.0 * v);
        }
    }
    throw std::logic_error("unknown extremal kind");
}

/// Smallest r in (0, 1) with h'(r) = 0, located on the positive real axis
/// by a sign scan of the truncated series followed by bisection. Empty when
/// h' keeps its sign on (0, 1). Only analytic kinds are accepted.
inline std::optional<double> critical_radius(const ExtremalSpec& spec, int scan_points = 4096) {
    detail::require(spec.kind != ExtremalKind::Fn_conjecture, "an analytic kind (f0, f1, fn)", "critical_radius");
    const auto f = build_extremal(spec);
    const auto& dh = f.dh();
    auto value = [&](double r) { return dh.horner(Complex{r, 0.0}).real(); };

    const double origin_sign = std::copysign(1.0, value(0.0));
    double lo = 0.0;
    for (int i = 1; i < scan_points; ++i) {
        const double r = static_cast<double>(i) / scan_points;
        const double v = value(r);
        if (v == 0.0) {
            return r;
        }
        if (std::copysign(1.0, v) != origin_sign) {
            double hi = r;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (!(mid > lo && mid < hi)) {
                    break;
                }
                const double vm = value(mid);
                if (vm == 0.0) {
                    return mid;
                }
                (std::copysign(1.0, vm) == origin_sign ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        lo = r;
    }
    return std::nullopt;
}

}  // namespace landau
