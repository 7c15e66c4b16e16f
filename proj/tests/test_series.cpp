#include <gtest/gtest.h>

#include "landau/extremal.hpp"
#include "landau/series.hpp"

using namespace landau;

TEST(Series, EvalIdentity) {
    EXPECT_EQ(series_eval(PowerSeries{0.0, 1.0}, Complex{0.5, 0.0}), Complex(0.5, 0.0));
}

TEST(Series, EvalSquare) {
    const auto v = series_eval(PowerSeries{0.0, 0.0, 1.0}, Complex{0.5, 0.5});
    EXPECT_NEAR(v.real(), 0.0, 1e-16);
    EXPECT_NEAR(v.imag(), 0.5, 1e-16);
}

TEST(Series, F0SeriesMatchesRationalForm) {
    const auto f = build_extremal(ExtremalSpec::f0(2.0, 64));
    for (double x : {0.2, -0.3, 0.5}) {
        for (double y : {0.0, 0.25, -0.1}) {
            const Complex z{x, y};
            if (std::abs(z) > 0.5) continue;
            const Complex closed = 2.0 * z * (1.0 - 2.0 * z) / (2.0 - z);
            EXPECT_LT(std::abs(series_eval(f.h(), z) - closed), 1e-12) << z;
        }
    }
    EXPECT_NEAR(series_eval(f.h(), Complex{0.2, 0.0}).real(), 2.0 * 0.2 * 0.6 / 1.8, 1e-15);
}

TEST(Series, EvalRejectsOutsideDisk) {
    const PowerSeries s{0.0, 1.0};
    EXPECT_THROW(series_eval(s, Complex{1.0, 0.0}), domain_error);
    EXPECT_THROW(series_eval(s, Complex{0.8, 0.8}), domain_error);
    EXPECT_THROW(series_eval(s, Complex{NAN, 0.0}), domain_error);
}

TEST(Series, RejectsNonFiniteCoefficients) {
    EXPECT_THROW((PowerSeries{0.0, INFINITY}), domain_error);
    EXPECT_THROW(PowerSeries(std::vector<Complex>{Complex{0.0, NAN}}), domain_error);
}

TEST(Series, Derivative) {
    const auto d = series_derivative(PowerSeries{0.0, 1.0, 1.0});
    EXPECT_EQ(d, (PowerSeries{1.0, 2.0}));
    EXPECT_EQ(d.degree(), 1u);
}

TEST(Series, DerivativeOfConstantIsZeroSeries) {
    const auto d = series_derivative(PowerSeries{5.0});
    EXPECT_EQ(d.degree(), 0u);
    EXPECT_EQ(d[0], Complex{});
}

TEST(Series, Antiderivative) {
    EXPECT_EQ(series_antiderivative(PowerSeries{1.0}), (PowerSeries{0.0, 1.0}));
    EXPECT_EQ(series_antiderivative(PowerSeries{1.0, 2.0, 3.0}), (PowerSeries{0.0, 1.0, 1.0, 1.0}));
}

TEST(Series, RoundtripDerivativeAntiderivative) {
    const PowerSeries s{0.0, 3.0, 5.0};
    EXPECT_EQ(series_antiderivative(series_derivative(s)), s);
}

TEST(Series, DerivativeOfAntiderivativeWithinOneUlp) {
    std::vector<Complex> c;
    for (int n = 0; n < 40; ++n) c.emplace_back(1.0 / (n + 3.0), std::sin(n + 0.5));
    const PowerSeries s(c);
    const auto back = series_derivative(series_antiderivative(s));
    ASSERT_EQ(back.degree(), s.degree());
    for (std::size_t n = 0; n < s.size(); ++n) {
        EXPECT_LE(std::abs(back[n].real() - s[n].real()), std::numeric_limits<double>::epsilon() * std::abs(s[n].real()));
        EXPECT_LE(std::abs(back[n].imag() - s[n].imag()), std::numeric_limits<double>::epsilon() * std::abs(s[n].imag()));
    }
}

TEST(Series, F1IntegrandCoefficient) {
    // Coefficient of z in 2(1 - 2z)/(2 - z) is (1 - 4)/2 = -1.5.
    const auto c = detail::f1_integrand_series(2.0, 32);
    EXPECT_DOUBLE_EQ(c[0].real(), 1.0);
    EXPECT_DOUBLE_EQ(c[1].real(), -1.5);
    EXPECT_DOUBLE_EQ(series_antiderivative(c)[2].real(), -0.75);
}

TEST(Series, F1DerivativeVanishesAtInverseLambda) {
    const auto f = build_extremal(ExtremalSpec::f1(2.0, 64));
    EXPECT_NEAR(std::abs(series_eval(f.dh(), Complex{0.5, 0.0})), 0.0, 1e-15);
}

TEST(Series, MultiplyTruncates) {
    const auto p = series_multiply(PowerSeries{1.0, 1.0}, PowerSeries{1.0, -1.0}, 1);
    EXPECT_EQ(p, (PowerSeries{1.0, 0.0}));
    const auto full = series_multiply(PowerSeries{1.0, 1.0}, PowerSeries{1.0, -1.0}, 2);
    EXPECT_EQ(full, (PowerSeries{1.0, 0.0, -1.0}));
}

TEST(Series, AdditionPadsDegree) {
    PowerSeries a{1.0};
    a += PowerSeries{0.0, 2.0, 3.0};
    EXPECT_EQ(a, (PowerSeries{1.0, 2.0, 3.0}));
}

TEST(Series, TrailingZerosKeepDegree) {
    const PowerSeries s{0.0, 1.0, 0.0, 0.0};
    EXPECT_EQ(s.degree(), 3u);
    EXPECT_EQ(s.coeff(10), Complex{});
}

TEST(Series, HornerStability) {
    // (1 - z)^20 near z = 1 keeps relative accuracy far better than the
    // naive power sum would.
    std::vector<Complex> c(21);
    double binom = 1.0;
    for (int k = 0; k <= 20; ++k) {
        c[k] = (k % 2 ? -binom : binom);
        binom = binom * (20 - k) / (k + 1);
    }
    const PowerSeries s(c);
    const auto v = s(Complex{0.5, 0.0});
    EXPECT_NEAR(v.real(), std::pow(0.5, 20), 1e-12);
}
