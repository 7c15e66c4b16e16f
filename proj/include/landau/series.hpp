#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "landau/errors.hpp"

namespace landau {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

namespace detail {

inline void require_in_disk(Complex z, const char* where) {
    if (!is_finite(z)) {
        throw domain_error(std::string(where) + ": non-finite argument");
    }
    if (!(std::abs(z) < 1.0)) {
        throw domain_error(std::string(where) + ": |z| must be < 1");
    }
}

}  // namespace detail

/// Truncated Taylor series sum_{n=0}^{N} c_n z^n. The degree is fixed at
/// construction; trailing zero coefficients are kept.
class PowerSeries {
public:
    PowerSeries() : coeffs_(1, Complex{}) {}

    explicit PowerSeries(std::size_t degree) : coeffs_(degree + 1, Complex{}) {}

    explicit PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            coeffs_.emplace_back();
        }
        for (const auto& c : coeffs_) {
            if (!is_finite(c)) {
                throw domain_error("PowerSeries: non-finite coefficient");
            }
        }
    }

    PowerSeries(std::initializer_list<Complex> coeffs)
        : PowerSeries(std::vector<Complex>(coeffs)) {}

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    const Complex& operator[](std::size_t n) const { return coeffs_[n]; }
    Complex& operator[](std::size_t n) { return coeffs_[n]; }

    /// Coefficient of z^n, zero beyond the truncation degree.
    Complex coeff(std::size_t n) const noexcept {
        return n < coeffs_.size() ? coeffs_[n] : Complex{};
    }

    std::span<const Complex> coefficients() const noexcept { return coeffs_; }

    /// Horner evaluation. Only admitted on the open unit disk.
    Complex operator()(Complex z) const {
        detail::require_in_disk(z, "series_eval");
        return horner(z);
    }

    /// Horner evaluation without the disk check; for callers that have
    /// already validated |z| < 1 (hot loops over grids).
    Complex horner(Complex z) const noexcept {
        Complex acc = coeffs_.back();
        for (std::size_t n = coeffs_.size() - 1; n-- > 0;) {
            acc = acc * z + coeffs_[n];
        }
        return acc;
    }

    PowerSeries& operator+=(const PowerSeries& other) {
        if (other.size() > size()) {
            coeffs_.resize(other.size());
        }
        for (std::size_t n = 0; n < other.size(); ++n) {
            coeffs_[n] += other[n];
        }
        return *this;
    }

    PowerSeries& operator*=(Complex s) {
        for (auto& c : coeffs_) {
            c *= s;
        }
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator*(Complex s, PowerSeries a) { return a *= s; }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Complex> coeffs_;
};

inline Complex series_eval(const PowerSeries& s, Complex z) { return s(z); }

/// d/dz. A degree-0 input yields the zero series of degree 0.
inline PowerSeries series_derivative(const PowerSeries& s) {
    if (s.degree() == 0) {
        return PowerSeries(0);
    }
    PowerSeries d(s.degree() - 1);
    for (std::size_t n = 0; n + 1 < s.size(); ++n) {
        d[n] = static_cast<double>(n + 1) * s[n + 1];
    }
    return d;
}

/// Antiderivative anchored at 0.
inline PowerSeries series_antiderivative(const PowerSeries& s) {
    PowerSeries a(s.degree() + 1);
    for (std::size_t n = 0; n < s.size(); ++n) {
        a[n + 1] = s[n] / static_cast<double>(n + 1);
    }
    return a;
}

/// Cauchy product truncated at `degree`.
inline PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b, std::size_t degree) {
    PowerSeries out(degree);
    for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
        if (a[i] == Complex{}) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// Returns a copy with degree exactly `degree` (padding with zeros or truncating).
inline PowerSeries series_resize(const PowerSeries& s, std::size_t degree) {
    PowerSeries out(degree);
    for (std::size_t n = 0; n <= degree && n < s.size(); ++n) {
        out[n] = s[n];
    }
    return out;
}

}  // namespace landau
