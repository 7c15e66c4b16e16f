#include <gtest/gtest.h>

#include "landau/coefficient_bounds.hpp"

using namespace landau;

TEST(CoefficientBound, SpecExamples) {
    EXPECT_DOUBLE_EQ(coefficient_bound(BoundVariant::cor4, 1.0, 0.0, 2.0, 2), 0.75);
    EXPECT_DOUBLE_EQ(coefficient_bound(BoundVariant::thm2, 1.0, 0.0, 2.0, 2), 0.75);
    EXPECT_DOUBLE_EQ(coefficient_bound(BoundVariant::conjecture, 2.0, 0.0, 2.0, 2), 1.5);
}

TEST(CoefficientBound, FrozenValues) {
    EXPECT_NEAR(coefficient_bound(BoundVariant::thm2, 1.5, 0.5, 2.0, 3), 1.0, 1e-15);
    EXPECT_NEAR(coefficient_bound(BoundVariant::cor5, 2.0, 1.0, 1.5, 4), 0.75, 1e-15);
    EXPECT_NEAR(coefficient_bound(BoundVariant::cor3, 2.0, 0.0, 3.0, 5), 1.1833333333333333333, 1e-15);
    EXPECT_NEAR(coefficient_bound(BoundVariant::cor4, 2.0, 0.0, 3.0, 5), 1.1666666666666666667, 1e-15);
}

TEST(CoefficientBound, ReductionsAtKpZero) {
    for (double K : {1.0, 1.5, 2.5}) {
        for (double L : {1.2, 2.0, 3.0}) {
            for (int n : {2, 3, 7}) {
                const double cor3 = coefficient_bound(BoundVariant::cor3, K, 0.0, L, n);
                EXPECT_NEAR(coefficient_bound(BoundVariant::thm2, K, 0.0, L, n), cor3, 1e-14 * cor3);
            }
        }
    }
    for (double L : {1.2, 2.0, 3.0}) {
        for (int n : {2, 3, 7}) {
            const double cor4 = coefficient_bound(BoundVariant::cor4, 1.0, 0.0, L, n);
            EXPECT_DOUBLE_EQ(cor4, (L * L - 1.0) / (n * L));
            for (auto v : {BoundVariant::thm2, BoundVariant::cor5, BoundVariant::cor3, BoundVariant::conjecture}) {
                EXPECT_NEAR(coefficient_bound(v, 1.0, 0.0, L, n), cor4, 1e-14 * cor4);
            }
        }
    }
}

TEST(CoefficientBound, ProvenExceedsConjectured) {
    for (double K : {1.5, 2.0, 3.0}) {
        EXPECT_GT(coefficient_bound(BoundVariant::cor4, K, 0.0, 2.0, 2),
                  coefficient_bound(BoundVariant::conjecture, K, 0.0, 2.0, 2));
    }
}

TEST(CoefficientBound, Errors) {
    EXPECT_THROW(coefficient_bound(BoundVariant::cor4, 1.0, 0.0, 2.0, 1), admissibility_error);
    EXPECT_THROW(coefficient_bound(BoundVariant::cor4, 0.9, 0.0, 2.0, 2), admissibility_error);
    EXPECT_THROW(coefficient_bound(BoundVariant::cor4, 1.0, 0.0, 1.0, 2), admissibility_error);  // bound 0
    EXPECT_THROW(coefficient_bound(BoundVariant::cor3, 1.0, 0.5, 2.0, 2), admissibility_error);
    EXPECT_THROW(coefficient_bound(BoundVariant::thm2, 1.0, -1.0, 2.0, 2), admissibility_error);
}

TEST(FirstCoefficient, Intervals) {
    EXPECT_EQ(first_coefficient_interval(BoundVariant::thm2, 1.0, 0.0), std::make_pair(1.0, 1.0));
    EXPECT_EQ(first_coefficient_interval(BoundVariant::cor5, 2.0, 0.0), std::make_pair(1.0, 2.0));
    EXPECT_EQ(first_coefficient_interval(BoundVariant::thm2, 2.0, 2.0), std::make_pair(0.5, 2.0));
    EXPECT_EQ(first_coefficient_interval(BoundVariant::cor4, 3.0, 0.0), std::make_pair(1.0, 3.0));
    const auto c3 = first_coefficient_interval(BoundVariant::cor3, 4.0, 0.0);
    EXPECT_DOUBLE_EQ(c3.first, 0.5);
    EXPECT_DOUBLE_EQ(c3.second, 2.0);
    EXPECT_NEAR(first_coefficient_interval(BoundVariant::cor5, 2.0, 1.0).second, 2.4142135623730950488, 1e-15);
    EXPECT_THROW(first_coefficient_interval(BoundVariant::conjecture, 1.0, 0.0), admissibility_error);
    EXPECT_THROW(first_coefficient_interval(BoundVariant::thm2, 0.5, 0.0), admissibility_error);
}

TEST(BoundVariant, TagRoundtrip) {
    for (auto v : {BoundVariant::thm2, BoundVariant::cor5, BoundVariant::cor3, BoundVariant::cor4,
                   BoundVariant::conjecture}) {
        EXPECT_EQ(parse_bound_variant(to_string(v)), v);
    }
    EXPECT_FALSE(parse_bound_variant("cor9").has_value());
}
