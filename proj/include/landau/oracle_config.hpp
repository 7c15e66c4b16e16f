#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "landau/harmonic_map.hpp"

namespace landau {

struct OracleConfig {
    GridSpec grid{};
    /// Image pairs with |f(z1) - f(z2)| <= pair_tolerance * |z1 - z2| count
    /// as collisions.
    double pair_tolerance = 1e-6;
    int bisection_steps = 40;
    std::uint64_t seed = 42;
    int samples = 1000;

    void validate() const {
        grid.validate();
        detail::require(pair_tolerance > 0.0, "pair_tolerance > 0", "OracleConfig");
        detail::require(bisection_steps >= 20, "bisection_steps >= 20", "OracleConfig");
        detail::require(samples >= 0, "samples >= 0", "OracleConfig");
    }

    bool operator==(const OracleConfig&) const = default;
};

enum class Verdict { holds, violated, inconclusive };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Evidence attached to a failed check. `z2` is set for image collisions,
/// `index` for coefficient-level failures.
struct Witness {
    std::string kind;
    std::optional<Complex> z1;
    std::optional<Complex> z2;
    std::optional<int> index;
    double value = 0.0;
};

struct OracleReport {
    Verdict verdict = Verdict::holds;
    std::optional<Witness> witness;
    /// Smallest (bound - value) over all evaluated points.
    double margin = std::numeric_limits<double>::infinity();
    /// Where `margin` was attained.
    std::optional<Complex> worst_point;
    OracleConfig config;
};

}  // namespace landau
