#pragma once

#include <cmath>

#include "landau/errors.hpp"

namespace landau {

enum class Lemma { G, H };

/// Positive slack of the two elementary logarithm inequalities used in the
/// schlicht-radius comparisons:
///   G: ln x > (x - 1/x)/2            on 0 < x < 1
///   H: 1 + x ln(x/(1+x)) < 1/(2x+1)  on x >= 1
inline double lemma_inequality_margin(Lemma which, double x) {
    if (!std::isfinite(x)) {
        throw domain_error("lemma margin: x must be finite");
    }
    if (which == Lemma::G) {
        if (!(x > 0.0 && x < 1.0)) {
            throw domain_error("lemma G: requires 0 < x < 1");
        }
        return std::log(x) - 0.5 * (x - 1.0 / x);
    }
    if (!(x >= 1.0)) {
        throw domain_error("lemma H: requires x >= 1");
    }
    // x ln(x/(1+x)) = -x log1p(1/x)
    return 1.0 / (2.0 * (x + 0.5)) - (1.0 - x * std::log1p(1.0 / x));
}

}  // namespace landau
