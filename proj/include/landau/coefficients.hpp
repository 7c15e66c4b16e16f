#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "landau/harmonic_map.hpp"

namespace landau {

struct CoefficientSet {
    std::vector<Complex> a;  ///< a_0..a_N (a_0 carries f(0))
    std::vector<Complex> b;  ///< b_0..b_N (b_0 is always 0)
};

using Evaluator = std::function<Complex(Complex)>;

/// Recovers a_n, b_n (n <= N) of f = sum a_n z^n + conj(sum b_n z^n) from
/// samples on |z| = r. The discrete Fourier coefficient at +n is a_n r^n,
/// at -n it is conj(b_n) r^n. `samples` defaults to 4(N+1) and must be at
/// least 4N. The r^{-N} amplification is capped at 1e12.
inline CoefficientSet extract_coefficients(const Evaluator& f, double r, int N, int samples = 0) {
    detail::require(N >= 0, "N >= 0", "extract_coefficients");
    if (!(r > 0.0 && r < 1.0)) {
        throw domain_error("extract_coefficients: requires 0 < r < 1");
    }
    if (samples == 0) {
        samples = 4 * (N + 1);
    }
    detail::require(samples >= 4 * N && samples >= 1, "samples >= 4N", "extract_coefficients");
    if (N * std::log10(1.0 / r) > 12.0) {
        throw domain_error("extract_coefficients: r^-N amplification exceeds 1e12; increase r or lower N");
    }

    const auto m = static_cast<std::size_t>(samples);
    std::vector<Complex> values(m);
    std::vector<Complex> unit(m);
    for (std::size_t k = 0; k < m; ++k) {
        unit[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
    }
    for (std::size_t k = 0; k < m; ++k) {
        values[k] = f(r * unit[k]);
    }

    // F(q) = (1/m) sum_k values[k] e^{-2 pi i k q / m}, indices reduced mod m
    // so each twiddle is a tabulated root of unity.
    auto fourier = [&](std::size_t q) {
        Complex acc{};
        for (std::size_t k = 0; k < m; ++k) {
            acc += values[k] * std::conj(unit[(k * q) % m]);
        }
        return acc / static_cast<double>(m);
    };

    CoefficientSet out;
    out.a.assign(static_cast<std::size_t>(N) + 1, Complex{});
    out.b.assign(static_cast<std::size_t>(N) + 1, Complex{});
    out.a[0] = fourier(0);
    double rn = 1.0;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(N); ++n) {
        rn *= r;
        out.a[n] = fourier(n % m) / rn;
        out.b[n] = std::conj(fourier((m - n % m) % m)) / rn;
    }
    return out;
}

inline CoefficientSet extract_coefficients(const HarmonicMap& f, double r, int N, int samples = 0) {
    return extract_coefficients([&f](Complex z) { return f.eval_unchecked(z); }, r, N, samples);
}

struct ParsevalResult {
    double integral = 0.0;
    double series_sum = 0.0;
};

/// Circle mean of |z f_z + conj(z) f_zbar|^2 at radius r (m-point trapezoid
/// rule) next to sum n^2 (|a_n|^2 + |b_n|^2) r^{2n}.
inline ParsevalResult parseval_mean(const HarmonicMap& f, double r, int m) {
    if (!(r > 0.0 && r < 1.0)) {
        throw domain_error("parseval_mean: requires 0 < r < 1");
    }
    detail::require(m >= 1, "m >= 1", "parseval_mean");

    std::vector<double> values(static_cast<std::size_t>(m));
    detail::parallel_for(values.size(), [&](std::size_t k) {
        const Complex z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(k) / m);
        // conj(z) f_zbar = conj(z g'(z))
        values[k] = std::norm(z * f.dh().horner(z) + std::conj(z * f.dg().horner(z)));
    });
    ParsevalResult out;
    for (double v : values) {
        out.integral += v;
    }
    out.integral /= m;

    const double r2 = r * r;
    double r2n = 1.0;
    for (std::size_t n = 1; n <= f.degree(); ++n) {
        r2n *= r2;
        const double nn = static_cast<double>(n) * static_cast<double>(n);
        out.series_sum += nn * (std::norm(f.h()[n]) + std::norm(f.g()[n])) * r2n;
    }
    return out;
}

}  // namespace landau
