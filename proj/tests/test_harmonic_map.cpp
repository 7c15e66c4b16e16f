#include <gtest/gtest.h>

#include "landau/extremal.hpp"
#include "landau/harmonic_map.hpp"
#include "landau/radii.hpp"

using namespace landau;

namespace {
HarmonicMap affine() { return HarmonicMap(PowerSeries{0.0, 1.0}, PowerSeries{0.0, 0.5}); }
HarmonicMap identity() { return HarmonicMap(PowerSeries{0.0, 1.0}, PowerSeries{0.0}); }
}  // namespace

TEST(HarmonicMap, EvalAffine) {
    const auto v = hmap_eval(affine(), Complex{0.0, 0.4});
    EXPECT_NEAR(v.real(), 0.0, 1e-16);
    EXPECT_NEAR(v.imag(), 0.2, 1e-16);
}

TEST(HarmonicMap, IdentityIsIdentity) {
    for (Complex z : {Complex{0.3, -0.2}, Complex{-0.7, 0.1}, Complex{}}) {
        EXPECT_EQ(hmap_eval(identity(), z), z);
    }
}

TEST(HarmonicMap, F0AtRho0GivesR0) {
    const auto f = build_extremal(ExtremalSpec::f0(2.0, 64));
    const double rho0 = 0.26794919243112270647;
    EXPECT_NEAR(hmap_eval(f, Complex{rho0, 0.0}).real(), 0.14359353944898165178, 1e-14);
}

TEST(HarmonicMap, EvalRejectsBoundary) {
    EXPECT_THROW(hmap_eval(identity(), Complex{0.0, 1.0}), domain_error);
    EXPECT_THROW(distortion_at(identity(), Complex{1.5, 0.0}), domain_error);
}

TEST(HarmonicMap, PadsToCommonDegree) {
    const HarmonicMap f(PowerSeries{0.0, 1.0, 0.2}, PowerSeries{0.0});
    EXPECT_EQ(f.degree(), 2u);
    EXPECT_EQ(f.g().degree(), 2u);
}

TEST(HarmonicMap, NormalizationAndLambdaAtOrigin) {
    EXPECT_TRUE(affine().normalized());
    EXPECT_DOUBLE_EQ(affine().lambda_at_origin(), 0.5);
    EXPECT_FALSE(HarmonicMap(PowerSeries{0.1, 1.0}, PowerSeries{0.0}).normalized());
    EXPECT_FALSE(HarmonicMap(PowerSeries{0.0, 1.0}, PowerSeries{0.1}).normalized());
    const HarmonicMap f(PowerSeries{0.2, 1.0}, PowerSeries{Complex{0.0, 0.3}});
    EXPECT_EQ(f.eval_unchecked(Complex{}), Complex(0.2, -0.3));
}

TEST(HarmonicMap, DistortionAffine) {
    const auto s = distortion_at(affine(), Complex{});
    EXPECT_DOUBLE_EQ(s.fz_abs, 1.0);
    EXPECT_DOUBLE_EQ(s.fzbar_abs, 0.5);
    EXPECT_DOUBLE_EQ(s.lambda_big, 1.5);
    EXPECT_DOUBLE_EQ(s.lambda_small, 0.5);
    EXPECT_DOUBLE_EQ(s.jacobian, 0.75);
}

TEST(HarmonicMap, DistortionIdentity) {
    const auto s = distortion_at(identity(), Complex{0.3, 0.4});
    EXPECT_EQ(s.fz_abs, 1.0);
    EXPECT_EQ(s.fzbar_abs, 0.0);
    EXPECT_EQ(s.lambda_big, 1.0);
    EXPECT_EQ(s.lambda_small, 1.0);
    EXPECT_EQ(s.jacobian, 1.0);
}

TEST(HarmonicMap, F0DerivativeVanishesAtRho0) {
    const auto f = build_extremal(ExtremalSpec::f0(2.0, 64));
    const auto s = distortion_at(f, Complex{landau_classical(2.0).univalence_radius, 0.0});
    EXPECT_LT(s.fz_abs, 1e-10);
}

TEST(HarmonicMap, JacobianEqualsProductOfDistortions) {
    const HarmonicMap f(PowerSeries{0.0, 1.0, Complex{0.3, -0.2}, 0.1}, PowerSeries{0.0, 0.2, Complex{0.0, 0.4}});
    GridSpec grid{12, 16, 0.95};
    for (const auto& z : grid.points()) {
        const auto s = distortion_at(f, z);
        const double prod = s.lambda_big * s.lambda_small;
        EXPECT_NEAR(std::abs(s.jacobian), prod, 1e-12 * std::max(1.0, prod)) << z;
    }
}

TEST(HarmonicMap, EvalIsAdditive) {
    const HarmonicMap f1(PowerSeries{0.0, 1.0, 0.3}, PowerSeries{0.0, 0.1});
    const HarmonicMap f2(PowerSeries{0.0, Complex{0.0, 0.5}}, PowerSeries{0.0, 0.2, Complex{0.1, 0.1}});
    const auto sum = f1 + f2;
    for (const auto& z : GridSpec{5, 7, 0.9}.points()) {
        EXPECT_LT(std::abs(sum(z) - (f1(z) + f2(z))), 1e-15);
    }
}

TEST(HarmonicMap, TruncationConsistencyF0) {
    const auto a = build_extremal(ExtremalSpec::f0(2.0, 64));
    const auto b = build_extremal(ExtremalSpec::f0(2.0, 128));
    for (const auto& z : GridSpec{10, 16, 0.5}.points()) {
        EXPECT_LT(std::abs(a(z) - b(z)), 1e-12);
    }
}

TEST(Grid, Layout) {
    const GridSpec g{4, 8, 0.8};
    EXPECT_EQ(g.size(), 33u);
    EXPECT_EQ(g.point(0), Complex{});
    EXPECT_NEAR(std::abs(g.point(1) - Complex{0.2, 0.0}), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(g.point(32) - std::polar(0.8, 2 * std::numbers::pi * 7 / 8)), 0.0, 1e-16);
    EXPECT_THROW((GridSpec{0, 8, 0.5}.validate()), admissibility_error);
    EXPECT_THROW((GridSpec{4, 3, 0.5}.validate()), admissibility_error);
    EXPECT_THROW((GridSpec{4, 8, 1.0}.validate()), admissibility_error);
}

TEST(ClassMembership, AffineIsThreeQuasiregular) {
    ClassParams p;
    p.K = 3.0;
    const auto r = check_class_membership(affine(), p, GridSpec{8, 8, 0.9});
    EXPECT_TRUE(r.sense_preserving.holds);
    EXPECT_TRUE(r.k_quasiregular.holds);
    EXPECT_NEAR(r.k_quasiregular.worst_margin, 0.0, 1e-15);
}

TEST(ClassMembership, AffineNotTwoQuasiregular) {
    ClassParams p;
    p.K = 2.0;
    const auto r = check_class_membership(affine(), p, GridSpec{8, 8, 0.9});
    EXPECT_FALSE(r.k_quasiregular.holds);
    ASSERT_TRUE(r.k_quasiregular.witness);
    EXPECT_EQ(*r.k_quasiregular.witness, Complex{});  // first in index order
    EXPECT_DOUBLE_EQ(r.k_quasiregular.witness_margin, -0.5);
}

TEST(ClassMembership, EllipticBoundaryCase) {
    ClassParams p;
    p.K = 1.0;
    p.Kp = 1.5;
    const auto r = check_class_membership(affine(), p, GridSpec{8, 8, 0.9});
    EXPECT_TRUE(r.elliptic.holds);
    EXPECT_NEAR(r.elliptic.worst_margin, 0.0, 1e-15);
}

TEST(ClassMembership, SenseReversingFailsAll) {
    const HarmonicMap f(PowerSeries{0.0, 0.5}, PowerSeries{0.0, 1.0});
    ClassParams p;
    p.K = 10.0;
    p.Kp = 10.0;
    const auto r = check_class_membership(f, p, GridSpec{4, 4, 0.5});
    EXPECT_FALSE(r.sense_preserving.holds);
    EXPECT_FALSE(r.k_quasiregular.holds);
    EXPECT_FALSE(r.elliptic.holds);
}

TEST(ClassMembership, AnalyticSensePreservingIffNonvanishingDerivative) {
    ClassParams p;
    const GridSpec g{16, 16, 0.9};
    // h' = 1 + z has no zero in the disk.
    EXPECT_TRUE(check_class_membership(HarmonicMap(PowerSeries{0.0, 1.0, 0.5}, PowerSeries{0.0}), p, g)
                    .sense_preserving.holds);
    // h' = z vanishes at the origin, which is a grid point.
    EXPECT_FALSE(check_class_membership(HarmonicMap(PowerSeries{0.0, 0.0, 0.5}, PowerSeries{0.0}), p, g)
                     .sense_preserving.holds);
}

TEST(ClassMembership, RejectsInvalidParams) {
    ClassParams p;
    p.K = 0.5;
    EXPECT_THROW(check_class_membership(affine(), p, GridSpec{}), admissibility_error);
    p.K = 1.0;
    p.Kp = -1.0;
    EXPECT_THROW(check_class_membership(affine(), p, GridSpec{}), admissibility_error);
}

TEST(ClassMembership, FnConjectureIsKQuasiregular) {
    ClassParams p;
    p.K = 2.0;
    const auto F = build_extremal(ExtremalSpec::Fn(2.0, 2.0, 3));
    const auto r = check_class_membership(F, p, GridSpec{32, 32, 0.9});
    EXPECT_TRUE(r.k_quasiregular.holds);
    EXPECT_NEAR(r.k_quasiregular.worst_margin, 0.0, 1e-12);
}
