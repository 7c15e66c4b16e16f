#include <gtest/gtest.h>

#include <random>

#include "landau/coefficients.hpp"
#include "landau/extremal.hpp"

using namespace landau;

namespace {

HarmonicMap random_map(std::uint64_t seed, int N) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PowerSeries h(static_cast<std::size_t>(N)), g(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        h[static_cast<std::size_t>(n)] = {u(rng), u(rng)};
        g[static_cast<std::size_t>(n)] = {u(rng), u(rng)};
    }
    return HarmonicMap(h, g);
}

}  // namespace

TEST(Coefficients, RoundtripRandom) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto f = random_map(seed, 12);
        const auto c = extract_coefficients(f, 0.5, 12);
        for (std::size_t n = 0; n <= 12; ++n) {
            EXPECT_LT(std::abs(c.a[n] - f.h()[n]), 1e-9);
            EXPECT_LT(std::abs(c.b[n] - f.g()[n]), 1e-9);
        }
    }
}

TEST(Coefficients, ConstantTermGoesToA0) {
    const HarmonicMap f(PowerSeries{Complex(0.25, -1.0), 1.0}, PowerSeries{0.0, 0.0, 0.5});
    const auto c = extract_coefficients(f, 0.6, 3);
    EXPECT_LT(std::abs(c.a[0] - Complex(0.25, -1.0)), 1e-15);
    EXPECT_EQ(c.b[0], Complex{});
    EXPECT_LT(std::abs(c.b[2] - 0.5), 1e-14);
}

TEST(Coefficients, ExtremalSeries) {
    const auto f = build_extremal(ExtremalSpec::fn(2.0, 3, 60));
    const auto c = extract_coefficients(f, 0.5, 9, 256);
    for (std::size_t n = 0; n <= 9; ++n) {
        EXPECT_LT(std::abs(c.a[n] - f.h()[n]), 1e-12) << n;
    }
}

TEST(Coefficients, Errors) {
    const HarmonicMap f(PowerSeries{0.0, 1.0}, PowerSeries{0.0});
    EXPECT_THROW(extract_coefficients(f, 1.0, 4), domain_error);
    EXPECT_THROW(extract_coefficients(f, 0.5, 4, 8), admissibility_error);
    EXPECT_THROW(extract_coefficients(f, 0.01, 10), domain_error);
    EXPECT_THROW(extract_coefficients(f, 0.5, -1), admissibility_error);
}

TEST(Parseval, Agreement) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto f = random_map(seed, 10);
        const auto p = parseval_mean(f, 0.7, 128);
        EXPECT_NEAR(p.integral, p.series_sum, 1e-12 * p.series_sum);
    }
}

TEST(Parseval, Identity) {
    const HarmonicMap id(PowerSeries{0.0, 1.0}, PowerSeries{0.0});
    const auto p = parseval_mean(id, 0.5, 64);
    EXPECT_DOUBLE_EQ(p.series_sum, 0.25);
    EXPECT_NEAR(p.integral, 0.25, 1e-16);
    EXPECT_THROW(parseval_mean(id, 0.0, 64), domain_error);
}
