#include <gtest/gtest.h>

#include "landau/sharpness.hpp"

using namespace landau;

namespace {

ClassParams lam(double L) {
    ClassParams p;
    p.LambdaBig = L;
    return p;
}

ClassParams bounded(double M) {
    ClassParams p;
    p.M = M;
    return p;
}

}  // namespace

TEST(Sharpness, LambdaFamily) {
    for (auto t : {Theorem::thmA, Theorem::thm1, Theorem::cor1, Theorem::cor2, Theorem::thm12}) {
        for (double L : {1.5, 2.0, 3.0}) {
            const auto rep = sharpness_report(t, lam(L));
            EXPECT_TRUE(rep.passed) << to_string(t) << " " << L;
            EXPECT_LT(rep.radius_delta, 1e-12);
            EXPECT_NEAR(rep.formula_radius, 1.0 / L, 1e-16);
        }
    }
    const auto a = sharpness_report(Theorem::thmA, lam(2.0));
    EXPECT_TRUE(a.schlicht_claimed_sharp);
    EXPECT_LT(*a.schlicht_delta, 1e-10);
    EXPECT_FALSE(sharpness_report(Theorem::thm12, lam(2.0)).oracle_schlicht.has_value());
}

TEST(Sharpness, Thm10NotClaimedSharp) {
    const auto rep = sharpness_report(Theorem::thm10, lam(2.0));
    EXPECT_TRUE(rep.passed);
    EXPECT_FALSE(rep.schlicht_claimed_sharp);
    EXPECT_GE(*rep.oracle_schlicht, *rep.formula_schlicht);
}

TEST(Sharpness, BoundedFamily) {
    for (auto t : {Theorem::thm11, Theorem::thmB, Theorem::thm0}) {
        for (double M : {1.5, 2.0, 3.0}) {
            const auto rep = sharpness_report(t, bounded(M));
            EXPECT_TRUE(rep.passed) << to_string(t) << " " << M;
            EXPECT_NEAR(*rep.critical, landau_classical(M).univalence_radius, 1e-12);
        }
    }
    EXPECT_FALSE(sharpness_report(Theorem::thm11, bounded(2.0)).formula_schlicht.has_value());
    const auto b = sharpness_report(Theorem::thmB, bounded(2.0));
    EXPECT_NEAR(*b.oracle_schlicht, 0.14359353944898165178, 1e-12);
}

TEST(Sharpness, Rejections) {
    ClassParams p = lam(2.0);
    p.K = 1.5;
    EXPECT_THROW(sharpness_report(Theorem::thm1, p), admissibility_error);
    EXPECT_THROW(sharpness_report(Theorem::cor1, p), admissibility_error);
    p.K = 1.0;
    p.Kp = 0.5;
    EXPECT_THROW(sharpness_report(Theorem::thm1, p), admissibility_error);
    EXPECT_THROW(sharpness_report(Theorem::thmA, lam(1.0)), admissibility_error);
    EXPECT_THROW(sharpness_report(Theorem::thm0, bounded(1.0)), admissibility_error);
    EXPECT_THROW(sharpness_report(Theorem::thmC, lam(2.0)), admissibility_error);
    EXPECT_THROW(sharpness_report(Theorem::thmA, ClassParams{}), admissibility_error);
}

TEST(Sharpness, DegreeHeuristic) {
    // (1/4)^k < 1e-17 needs k = 29, plus the fixed margin of 16.
    EXPECT_EQ(detail::sharpness_degree(2.0, 0.5), 45);
    EXPECT_EQ(detail::sharpness_degree(1.0000001, 1.0 / 1.0000001), 200016);
}
