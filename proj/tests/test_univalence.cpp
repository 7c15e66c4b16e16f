#include <gtest/gtest.h>

#include "landau/extremal.hpp"
#include "landau/univalence.hpp"

using namespace landau;

namespace {

OracleConfig small_config() {
    OracleConfig cfg;
    cfg.grid = GridSpec{96, 96, 0.9};
    return cfg;
}

// Brute-force check for injectivity: all pairs on a small disk sample.
bool pairwise_injective(const HarmonicMap& f, double r, int R, int A) {
    GridSpec g{R, A, r};
    const auto pts = g.points();
    std::vector<Complex> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        img[i] = f(pts[i]);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (std::abs(img[i] - img[j]) <= 1e-6 * std::abs(pts[i] - pts[j])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST(Univalence, F0BracketContainsRho0) {
    const auto f = build_extremal(ExtremalSpec::f0(2.0, 160));
    const auto b = univalence_radius_search(f, small_config());
    EXPECT_EQ(b.verdict, Verdict::violated);
    EXPECT_LE(b.lo, 0.26794919243112270647 + 1e-15);
    EXPECT_GE(b.hi, 0.26794919243112270647 - 1e-15);
    EXPECT_LT(b.hi - b.lo, 1e-9);
    ASSERT_TRUE(b.witness.has_value());
}

TEST(Univalence, F1BracketContainsHalf) {
    const auto f = build_extremal(ExtremalSpec::f1(2.0, 200));
    const auto b = univalence_radius_search(f, small_config());
    EXPECT_LE(b.lo, 0.5 + 1e-15);
    EXPECT_GE(b.hi, 0.5 - 1e-15);
    EXPECT_LT(b.hi - b.lo, 1e-9);
}

TEST(Univalence, IdentityHolds) {
    const HarmonicMap id(PowerSeries{0.0, 1.0}, PowerSeries{0.0});
    const auto b = univalence_radius_search(id, small_config());
    // No witness anywhere on the grid: the search cannot certify beyond it.
    EXPECT_EQ(b.verdict, Verdict::inconclusive);
    EXPECT_DOUBLE_EQ(b.lo, 0.9);
    EXPECT_DOUBLE_EQ(b.hi, 0.9);
    EXPECT_FALSE(b.witness.has_value());
}

TEST(Univalence, AgreesWithBruteForce) {
    const auto f = build_extremal(ExtremalSpec::f0(2.0, 160));
    const auto b = univalence_radius_search(f, small_config());
    EXPECT_TRUE(pairwise_injective(f, b.lo, 12, 48));
}

TEST(Univalence, DetectsFoldWithoutCriticalPoint) {
    // z + conj(z)^2 / 1.5 is sense-reversing beyond |z| = 3/4 (|g'| > |h'|).
    const HarmonicMap f(PowerSeries{0.0, 1.0}, PowerSeries{0.0, 0.0, 1.0 / 1.5});
    const auto b = univalence_radius_search(f, small_config());
    EXPECT_EQ(b.verdict, Verdict::violated);
    EXPECT_LE(b.lo, 0.75 + 1e-12);
}

TEST(Univalence, SenseReversingIsHandled) {
    const HarmonicMap f(PowerSeries{0.0}, PowerSeries{0.0, 1.0});  // conj(z)
    const auto b = univalence_radius_search(f, small_config());
    EXPECT_EQ(b.verdict, Verdict::inconclusive);
    EXPECT_FALSE(b.witness.has_value());
}

TEST(Univalence, Degenerate) {
    const HarmonicMap f(PowerSeries{0.0, 1.0}, PowerSeries{0.0, 1.0});  // 2 Re z
    const auto b = univalence_radius_search(f, small_config());
    EXPECT_EQ(b.verdict, Verdict::violated);
    EXPECT_EQ(b.witness->kind, "degenerate-jacobian");
    EXPECT_EQ(b.lo, 0.0);
}

TEST(Univalence, RequiresNormalized) {
    const HarmonicMap f(PowerSeries{1.0, 1.0}, PowerSeries{0.0});
    EXPECT_THROW(univalence_radius_search(f, small_config()), admissibility_error);
    OracleConfig bad = small_config();
    bad.bisection_steps = 5;
    EXPECT_THROW(univalence_radius_search(HarmonicMap(PowerSeries{0.0, 1.0}, PowerSeries{0.0}), bad),
                 admissibility_error);
}

TEST(Univalence, Deterministic) {
    const auto f = build_extremal(ExtremalSpec::f1(1.6, 120));
    const auto a = univalence_radius_search(f, small_config());
    const auto b = univalence_radius_search(f, small_config());
    EXPECT_EQ(a.lo, b.lo);
    EXPECT_EQ(a.hi, b.hi);
}

TEST(SchlichtRadius, Values) {
    const HarmonicMap id(PowerSeries{0.0, 1.0}, PowerSeries{0.0});
    EXPECT_NEAR(schlicht_radius(id, 0.4), 0.4, 1e-16);
    const auto f = build_extremal(ExtremalSpec::f0(2.0, 200));
    EXPECT_NEAR(schlicht_radius(f, 0.26794919243112270647, 4096), 0.14359353944898165178, 1e-13);
    EXPECT_THROW(schlicht_radius(id, 1.0), domain_error);
    EXPECT_THROW(schlicht_radius(id, 0.0), admissibility_error);
    EXPECT_THROW(schlicht_radius(id, 0.5, 10), admissibility_error);
}
