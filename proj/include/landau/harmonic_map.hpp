#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "landau/parallel.hpp"
#include "landau/params.hpp"
#include "landau/series.hpp"

namespace landau {

/// f = h + conj(g) on the unit disk. h and g share one truncation degree.
class HarmonicMap {
public:
    HarmonicMap() : HarmonicMap(PowerSeries(0), PowerSeries(0)) {}

    HarmonicMap(PowerSeries h, PowerSeries g, std::string label = {})
        : label_(std::move(label)) {
        const std::size_t n = std::max(h.degree(), g.degree());
        h_ = series_resize(h, n);
        g_ = series_resize(g, n);
        dh_ = series_derivative(h_);
        dg_ = series_derivative(g_);
    }

    const PowerSeries& h() const noexcept { return h_; }
    const PowerSeries& g() const noexcept { return g_; }
    const PowerSeries& dh() const noexcept { return dh_; }
    const PowerSeries& dg() const noexcept { return dg_; }
    std::size_t degree() const noexcept { return h_.degree(); }
    const std::string& label() const noexcept { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    /// h(0) = g(0) = 0.
    bool normalized() const noexcept { return h_[0] == Complex{} && g_[0] == Complex{}; }

    /// lambda_f(0) = ||a_1| - |b_1||.
    double lambda_at_origin() const noexcept {
        return std::abs(std::abs(h_.coeff(1)) - std::abs(g_.coeff(1)));
    }

    Complex operator()(Complex z) const {
        detail::require_in_disk(z, "hmap_eval");
        return eval_unchecked(z);
    }

    Complex eval_unchecked(Complex z) const noexcept {
        return h_.horner(z) + std::conj(g_.horner(z));
    }

    friend HarmonicMap operator+(const HarmonicMap& a, const HarmonicMap& b) {
        return HarmonicMap(a.h_ + b.h_, a.g_ + b.g_);
    }

private:
    PowerSeries h_;
    PowerSeries g_;
    PowerSeries dh_;
    PowerSeries dg_;
    std::string label_;
};

inline Complex hmap_eval(const HarmonicMap& f, Complex z) { return f(z); }

/// Pointwise distortion data. J = |f_z|^2 - |f_zbar|^2.
struct DistortionSample {
    Complex z;
    double fz_abs = 0.0;
    double fzbar_abs = 0.0;
    double lambda_big = 0.0;
    double lambda_small = 0.0;
    double jacobian = 0.0;
};

namespace detail {

inline DistortionSample distortion_unchecked(const HarmonicMap& f, Complex z) noexcept {
    DistortionSample s;
    s.z = z;
    s.fz_abs = std::abs(f.dh().horner(z));
    s.fzbar_abs = std::abs(f.dg().horner(z));
    s.lambda_big = s.fz_abs + s.fzbar_abs;
    s.lambda_small = std::abs(s.fz_abs - s.fzbar_abs);
    s.jacobian = (s.fz_abs - s.fzbar_abs) * (s.fz_abs + s.fzbar_abs);
    return s;
}

}  // namespace detail

inline DistortionSample distortion_at(const HarmonicMap& f, Complex z) {
    detail::require_in_disk(z, "distortion_at");
    return detail::distortion_unchecked(f, z);
}

/// Polar sampling grid: the origin plus r_j e^{i theta_k},
/// r_j = max_radius * j / radial_steps (j = 1..radial_steps),
/// theta_k = 2 pi k / angular_steps.
struct GridSpec {
    int radial_steps = 64;
    int angular_steps = 64;
    double max_radius = 0.9;

    void validate() const {
        detail::require(radial_steps >= 1, "radial_steps >= 1", "GridSpec");
        detail::require(angular_steps >= 4, "angular_steps >= 4", "GridSpec");
        detail::require(max_radius > 0.0 && max_radius < 1.0, "0 < max_radius < 1", "GridSpec");
    }

    std::size_t size() const noexcept {
        return 1 + static_cast<std::size_t>(radial_steps) * static_cast<std::size_t>(angular_steps);
    }

    double radius(int j) const noexcept { return max_radius * j / radial_steps; }

    double angle(int k) const noexcept { return 2.0 * std::numbers::pi * k / angular_steps; }

    /// Index 0 is the origin; index 1 + (j-1)*angular_steps + k is (j, k).
    Complex point(std::size_t index) const noexcept {
        if (index == 0) {
            return {};
        }
        const auto rest = index - 1;
        const int j = static_cast<int>(rest / static_cast<std::size_t>(angular_steps)) + 1;
        const int k = static_cast<int>(rest % static_cast<std::size_t>(angular_steps));
        return std::polar(radius(j), angle(k));
    }

    std::vector<Complex> points() const {
        std::vector<Complex> out(size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = point(i);
        }
        return out;
    }

    bool operator==(const GridSpec&) const = default;
};

/// Outcome of one pointwise inequality over a grid. `worst_margin` is the
/// smallest (bound - value) seen; `witness` is the first grid point, in
/// index order, where the inequality failed.
struct PropertyCheck {
    bool holds = true;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::optional<Complex> witness;
    double witness_margin = 0.0;
};

struct ClassReport {
    PropertyCheck sense_preserving;
    PropertyCheck k_quasiregular;
    PropertyCheck elliptic;
    GridSpec grid;
    ClassParams params;
};

namespace detail {

/// Margins within this relative band of zero count as satisfied; the
/// boundary cases of the class inequalities are attained exactly by
/// affine maps and must not flip on rounding.
inline constexpr double kMarginSlack = 64 * std::numeric_limits<double>::epsilon();

inline void record(PropertyCheck& check, double margin, double scale, Complex z) {
    check.worst_margin = std::min(check.worst_margin, margin);
    if (margin < -kMarginSlack * std::max(1.0, scale) && !check.witness) {
        check.holds = false;
        check.witness = z;
        check.witness_margin = margin;
    }
}

}  // namespace detail

/// Sampled membership test for the sense-preserving, K-quasiregular and
/// (K, K')-elliptic classes. A `holds` verdict means no violation at the
/// grid resolution. Quasiregular and elliptic both include the
/// sense-preserving requirement.
inline ClassReport check_class_membership(const HarmonicMap& f, const ClassParams& params, const GridSpec& grid) {
    params.validate_base("check_class_membership");
    grid.validate();

    std::vector<DistortionSample> samples(grid.size());
    detail::parallel_for(samples.size(), [&](std::size_t i) {
        samples[i] = detail::distortion_unchecked(f, grid.point(i));
    });

    ClassReport report;
    report.grid = grid;
    report.params = params;
    for (const auto& s : samples) {
        const double scale = s.lambda_big * s.lambda_big;
        const bool sp = s.jacobian > 0.0;
        report.sense_preserving.worst_margin = std::min(report.sense_preserving.worst_margin, s.jacobian);
        if (!sp && !report.sense_preserving.witness) {
            report.sense_preserving.holds = false;
            report.sense_preserving.witness = s.z;
            report.sense_preserving.witness_margin = s.jacobian;
        }

        detail::record(report.k_quasiregular, params.K * s.lambda_small - s.lambda_big, s.lambda_big, s.z);
        detail::record(report.elliptic, params.K * s.jacobian + params.Kp - s.lambda_big * s.lambda_big,
                       scale + params.Kp, s.z);
        if (!sp) {
            for (auto* check : {&report.k_quasiregular, &report.elliptic}) {
                if (!check->witness) {
                    check->holds = false;
                    check->witness = s.z;
                    check->witness_margin = s.jacobian;
                }
            }
        }
    }
    return report;
}

}  // namespace landau
