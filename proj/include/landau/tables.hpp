#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "landau/radii.hpp"

namespace landau {

/// One parameter column of a comparison table.
struct TableColumn {
    double K = 1.0;
    double Kp = 0.0;  ///< unused by table 2
    double LambdaBig = 1.0;
    std::array<double, 4> values{};

    std::string header(int which) const {
        char buf[64];
        if (which == 1) {
            std::snprintf(buf, sizeof buf, "(%.1f,%.1f,%.1f)", K, Kp, LambdaBig);
        } else {
            std::snprintf(buf, sizeof buf, "(%.1f,%.1f)", K, LambdaBig);
        }
        return buf;
    }
};

/// Table 1: rows r1, rho1, sigma1, R1 over (K, K', Lambda) for the elliptic
/// radii next to the earlier elliptic result.
/// Table 2: rows r3', rho2, sigma3', R2 over (K, Lambda) for the
/// J_f(0) = 1 quasiregular radii next to the earlier quasiregular result.
struct ComparisonTable {
    int which = 1;
    std::array<const char*, 4> rows{};
    std::vector<TableColumn> columns;
};

namespace detail {

inline void require_table(int which) {
    if (which != 1 && which != 2) {
        throw admissibility_error("table: requires which = 1 or 2");
    }
}

inline std::vector<std::array<double, 3>> table_parameters(int which) {
    if (which == 1) {
        return {{1.0, 1.1, 1.2}, {1.2, 1.3, 1.4}, {1.4, 1.5, 1.6},
                {1.6, 1.7, 1.8}, {1.8, 1.9, 2.0}, {2.0, 2.1, 2.2}};
    }
    return {{1.0, 0.0, 1.2}, {1.2, 0.0, 1.4}, {1.4, 0.0, 1.6}, {1.6, 0.0, 1.8},
            {1.8, 0.0, 2.0}, {2.0, 0.0, 2.2}, {2.2, 0.0, 2.4}};
}

inline std::array<const char*, 4> table_rows(int which) {
    if (which == 1) {
        return {"r1", "rho1", "sigma1", "R1"};
    }
    return {"r3'", "rho2", "sigma3'", "R2"};
}

}  // namespace detail

/// Recomputes a table from the radii formulas (no other arithmetic).
inline ComparisonTable compute_table(int which) {
    detail::require_table(which);
    ComparisonTable t{which, detail::table_rows(which), {}};
    for (const auto& [K, Kp, L] : detail::table_parameters(which)) {
        TableColumn col{K, Kp, L, {}};
        if (which == 1) {
            const auto ours = elliptic_radii(K, Kp, L);
            const auto prior = prior_radii(PriorVariant::thmC, K, Kp, L);
            col.values = {ours.univalence_radius, prior.univalence_radius, *ours.schlicht_radius,
                          *prior.schlicht_radius};
        } else {
            const auto ours = quasiregular_jacobian_radii(K, L);
            const auto prior = prior_radii(PriorVariant::thmD, K, 0.0, L);
            col.values = {ours.univalence_radius, prior.univalence_radius, *ours.schlicht_radius,
                          *prior.schlicht_radius};
        }
        t.columns.push_back(col);
    }
    return t;
}

/// The published 4-decimal values, column by column.
inline ComparisonTable reference_table(int which) {
    detail::require_table(which);
    static constexpr double t1[4][6] = {
        {0.5530, 0.4432, 0.3598, 0.2956, 0.2459, 0.2069},
        {0.3078, 0.2618, 0.2240, 0.1929, 0.1673, 0.1460},
        {0.3100, 0.2377, 0.1882, 0.1523, 0.1255, 0.1049},
        {0.1727, 0.1441, 0.1214, 0.1003, 0.0887, 0.0768},
    };
    static constexpr double t2[4][7] = {
        {0.8333, 0.5434, 0.3773, 0.2745, 0.2070, 0.1607, 0.1277},
        {0.4545, 0.3521, 0.2739, 0.2154, 0.1715, 0.1385, 0.1132},
        {0.5740, 0.2768, 0.1676, 0.1113, 0.0783, 0.0573, 0.0433},
        {0.2726, 0.1838, 0.1281, 0.0920, 0.0679, 0.0514, 0.0397},
    };
    ComparisonTable t{which, detail::table_rows(which), {}};
    const auto params = detail::table_parameters(which);
    for (std::size_t c = 0; c < params.size(); ++c) {
        TableColumn col{params[c][0], params[c][1], params[c][2], {}};
        for (std::size_t r = 0; r < 4; ++r) {
            col.values[r] = which == 1 ? t1[r][c] : t2[r][c];
        }
        t.columns.push_back(col);
    }
    return t;
}

/// 4 decimals, rounding half away from zero on the decimal scaled value.
inline std::string format_fixed4(double x) {
    const long long scaled = std::llround(x * 1e4);
    const long long mag = scaled < 0 ? -scaled : scaled;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%lld.%04lld", scaled < 0 ? "-" : "", mag / 10000, mag % 10000);
    return buf;
}

/// Comma-separated, header row of quoted parameter tuples, LF endings.
inline void write_table_csv(std::ostream& os, const ComparisonTable& t) {
    os << "quantity";
    for (const auto& col : t.columns) {
        os << ",\"" << col.header(t.which) << '"';
    }
    os << '\n';
    for (std::size_t r = 0; r < 4; ++r) {
        os << t.rows[r];
        for (const auto& col : t.columns) {
            os << ',' << format_fixed4(col.values[r]);
        }
        os << '\n';
    }
}

}  // namespace landau
