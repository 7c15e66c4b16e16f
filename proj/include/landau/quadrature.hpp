#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

#include "landau/series.hpp"

namespace landau {

struct QuadratureResult {
    Complex value;
    double error_estimate = 0.0;
    int intervals = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    Complex kronrod;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class Fn>
Panel gauss_kronrod_panel(const Fn& fn, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Complex fc = fn(centre);
    Complex kronrod = kKronrodWeights[7] * fc;
    Complex gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const Complex pair = fn(centre - dx) + fn(centre + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * pair;
        }
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (G7/K15) integration of a complex-valued
/// function of a real variable over [a, b]. The panel with the largest
/// error estimate is bisected until the summed estimate drops below
/// `abs_tol` or `max_panels` is reached.
template <class Fn>
QuadratureResult integrate_gk15(const Fn& fn, double a, double b, double abs_tol = 1e-12, int max_panels = 2000) {
    std::priority_queue<detail::Panel> panels;
    panels.push(detail::gauss_kronrod_panel(fn, a, b));
    double total_error = panels.top().error;

    while (total_error > abs_tol && static_cast<int>(panels.size()) < max_panels) {
        const auto worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            panels.push(worst);
            break;
        }
        auto left = detail::gauss_kronrod_panel(fn, worst.a, mid);
        auto right = detail::gauss_kronrod_panel(fn, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    QuadratureResult result;
    result.intervals = static_cast<int>(panels.size());
    result.error_estimate = 0.0;
    std::vector<detail::Panel> all;
    all.reserve(panels.size());
    while (!panels.empty()) {
        all.push_back(panels.top());
        panels.pop();
    }
    // Sum from smallest contribution up for a stable total.
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
        result.value += it->kronrod;
        result.error_estimate += it->error;
    }
    result.converged = result.error_estimate <= abs_tol;
    return result;
}

/// Integral of an analytic integrand along the straight segment [0, z]:
/// int_0^1 phi(t z) z dt.
template <class Fn>
QuadratureResult integrate_segment(const Fn& integrand, Complex z, double abs_tol = 1e-12) {
    return integrate_gk15([&](double t) { return integrand(t * z) * z; }, 0.0, 1.0, abs_tol);
}

}  // namespace landau
