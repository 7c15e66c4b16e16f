#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "landau/coefficient_bounds.hpp"
#include "landau/extremal.hpp"
#include "landau/oracle_config.hpp"

namespace landau {

struct ScanSample {
    int index = 0;  ///< -1 marks the Fn witness
    double value = 0.0;

    bool operator==(const ScanSample&) const = default;
};

/// Evidence for the coefficient conjecture on K-quasiregular maps with
/// lambda_F(0) = 1 and lambda_F <= Lambda.
struct ScanReport {
    double K = 1.0;
    double LambdaBig = 2.0;
    int n = 2;
    int samples = 0;
    int accepted = 0;
    int rejected = 0;
    double max_observed = 0.0;
    int argmax = 0;
    double conjectured_bound = 0.0;
    double proven_bound = 0.0;
    double witness_value = 0.0;  ///< |a_n| + |b_n| of the Fn extremal
    std::vector<ScanSample> counterexamples;     ///< above the conjectured bound + 1e-9
    std::vector<ScanSample> proven_violations;   ///< above the proven bound + 1e-9 (oracle bug)
    OracleConfig config;

    bool operator==(const ScanReport&) const = default;
};

namespace detail {

inline constexpr double kScanTolerance = 1e-9;

struct ScanDraw {
    HarmonicMap map;
    bool in_class = false;
};

/// Random element of the class built so that membership holds analytically:
///   w  = sum w_k z^k with sum |w_k| <= q (K-1)/(K+1), so |g'/h'| = |w| keeps
///        Lambda_F / lambda_F <= K;
///   h' = alpha (1 + sum c_k z^k), alpha = 1/(1 - |w_0|), so lambda_F(0) = 1;
///   sum |c_k| <= Lambda (1 - |w_0|) - 1, so lambda_F <= |h'| <= Lambda.
/// Magnitudes decay geometrically with ratio 1/Lambda; phases are uniform.
/// The grid check still runs and rejects anything that slips through.
inline ScanDraw draw_scan_sample(double K, double L, int n, const OracleConfig& cfg, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto phase = [&] { return std::polar(1.0, 2.0 * std::numbers::pi * unit(rng)); };

    const std::size_t dh_degree = static_cast<std::size_t>(n) + 2;
    const std::size_t w_degree = 3;

    auto geometric_profile = [&](std::size_t first, std::size_t last, double budget) {
        std::vector<Complex> out(last + 1, Complex{});
        double total = 0.0;
        double ratio = 1.0;
        for (std::size_t k = first; k <= last; ++k) {
            const double mag = ratio * unit(rng);
            out[k] = mag * phase();
            total += mag;
            ratio /= L;
        }
        if (total > 0.0) {
            for (auto& c : out) {
                c *= budget / total;
            }
        }
        return out;
    };

    const double w_budget = unit(rng) * (K - 1.0) / (K + 1.0);
    const double w0_mag = unit(rng) * std::min(w_budget, 1.0 - 1.0 / L);
    auto w = geometric_profile(1, w_degree, w_budget - w0_mag);
    w[0] = w0_mag * phase();

    const double alpha = 1.0 / (1.0 - w0_mag);
    const double c_budget = std::max(0.0, unit(rng) * (L * (1.0 - w0_mag) - 1.0));
    auto c = geometric_profile(1, dh_degree, c_budget);
    c[0] = 1.0;

    PowerSeries dh(std::move(c));
    dh *= alpha;
    const PowerSeries dg = series_multiply(PowerSeries(std::move(w)), dh, dh_degree + w_degree);
    auto h = series_antiderivative(dh);
    auto g = series_antiderivative(dg);

    ScanDraw out{HarmonicMap(std::move(h), std::move(g)), true};
    for (std::size_t i = 0; i < cfg.grid.size() && out.in_class; ++i) {
        const auto s = distortion_unchecked(out.map, cfg.grid.point(i));
        const bool sp = s.jacobian > 0.0;
        const bool quasi = s.lambda_big <= K * s.lambda_small * (1.0 + kMarginSlack);
        const bool bounded = s.lambda_small <= L * (1.0 + kMarginSlack);
        out.in_class = sp && quasi && bounded;
    }
    return out;
}

}  // namespace detail

/// Samples cfg.samples random class members plus the Fn extremal and reports
/// the largest |a_n| + |b_n| against the conjectured and the proven bound.
/// Per-sample generators are seeded from (cfg.seed, index), and results are
/// reduced in index order, so the report does not depend on thread count.
inline ScanReport conjecture_scan(double K, double LambdaBig, int n, const OracleConfig& cfg) {
    cfg.validate();
    const std::string ctx = "conjecture_scan";
    detail::require(std::isfinite(K) && K >= 1.0, "K >= 1", ctx);
    detail::require(std::isfinite(LambdaBig) && LambdaBig > 1.0, "Lambda > 1", ctx);
    detail::require(n >= 2, "n >= 2", ctx);

    ScanReport report;
    report.K = K;
    report.LambdaBig = LambdaBig;
    report.n = n;
    report.samples = cfg.samples;
    report.config = cfg;
    report.conjectured_bound = coefficient_bound(BoundVariant::conjecture, K, 0.0, LambdaBig, n);
    report.proven_bound = coefficient_bound(BoundVariant::cor4, K, 0.0, LambdaBig, n);

    const auto nn = static_cast<std::size_t>(n);
    const auto witness = build_extremal(ExtremalSpec::Fn(K, LambdaBig, n));
    report.witness_value = std::abs(witness.h()[nn]) + std::abs(witness.g()[nn]);

    struct Result {
        bool in_class;
        double value;
    };
    std::vector<Result> results(static_cast<std::size_t>(cfg.samples));
    detail::parallel_for(results.size(), [&](std::size_t i) {
        const auto draw = detail::draw_scan_sample(K, LambdaBig, n, cfg, i);
        results[i] = {draw.in_class, std::abs(draw.map.h().coeff(nn)) + std::abs(draw.map.g().coeff(nn))};
    });

    auto consider = [&](int index, double value) {
        if (value > report.max_observed) {
            report.max_observed = value;
            report.argmax = index;
        }
        if (value > report.conjectured_bound + detail::kScanTolerance) {
            report.counterexamples.push_back({index, value});
        }
        if (value > report.proven_bound + detail::kScanTolerance) {
            report.proven_violations.push_back({index, value});
        }
    };
    consider(-1, report.witness_value);
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].in_class) {
            ++report.rejected;
            continue;
        }
        ++report.accepted;
        consider(static_cast<int>(i), results[i].value);
    }
    return report;
}

}  // namespace landau
