#include "loghankel/classes.hpp"
#include "loghankel/functionals.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace loghankel;
using loghankel::testing::koebe;
using loghankel::testing::random_params;

namespace {

TruncatedSeries half_plane_p(int order) { return boundary_p(DiskParams(1.0, 0.0, 0.0), BoundaryLevel::one, order); }

} // namespace

TEST(ClassTag, ParsesNames) {
    EXPECT_EQ(parse_class_tag("convex"), ClassTag::convex);
    EXPECT_EQ(parse_class_tag("starlike"), ClassTag::starlike);
    EXPECT_EQ(to_string(ClassTag::starlike), "starlike");
    EXPECT_THROW(parse_class_tag("close-to-convex"), DomainError);
}

TEST(SchlichtFunction, RequiresNormalization) {
    EXPECT_THROW(SchlichtFunction(TruncatedSeries::constant(1.0, 3), ClassTag::generic), DomainError);
}

TEST(StarlikeFromP, HalfPlaneGivesKoebe) {
    const auto f = starlike_from_p(half_plane_p(12), 12);
    EXPECT_EQ(f.class_tag(), ClassTag::starlike);
    EXPECT_LE(max_abs_diff(f.series(), koebe(12)), 1e-12);
}

TEST(StarlikeFromP, ConstantGivesIdentity) {
    const auto f = starlike_from_p(TruncatedSeries::constant(1.0, 8), 8);
    EXPECT_EQ(f.series(), TruncatedSeries::identity(8));
}

TEST(StarlikeFromP, LinearByHand) {
    const auto f = starlike_from_p(TruncatedSeries(std::vector<Complex>{1.0, 1.0}), 4);
    EXPECT_NEAR(f.coeff(2).real(), 1.0, 1e-15);
    EXPECT_NEAR(f.coeff(3).real(), 0.5, 1e-15);
    EXPECT_NEAR(f.coeff(4).real(), 1.0 / 6.0, 1e-15);
}

TEST(StarlikeFromP, RejectsBadStart) {
    EXPECT_THROW(starlike_from_p(TruncatedSeries::constant(2.0, 4), 4), DomainError);
    EXPECT_THROW(convex_from_p(TruncatedSeries::identity(4), 4), DomainError);
}

TEST(ConvexFromP, HalfPlaneGivesHalfPlaneMap) {
    const auto f = convex_from_p(half_plane_p(12), 12);
    for (int n = 1; n <= 12; ++n) {
        EXPECT_NEAR(std::abs(f.coeff(n) - Complex(1.0)), 0.0, 1e-13) << n;
    }
}

TEST(ConvexFromP, ConstantGivesIdentity) {
    EXPECT_EQ(convex_from_p(TruncatedSeries::constant(1.0, 6), 6).series(), TruncatedSeries::identity(6));
}

TEST(ConvexFromP, ExtremalLeadingCoefficients) {
    const double s = std::sqrt(2.0 / 11.0);
    const auto p = boundary_p(DiskParams(s, 1.0, 0.0), BoundaryLevel::two, 12);
    const auto f = convex_from_p(p, 12);
    const double c1 = 2.0 * s;
    const double c2 = 2.0;
    EXPECT_NEAR(f.coeff(2).real(), s, 1e-15);
    EXPECT_NEAR(f.coeff(2).real(), 0.42640, 1e-5);
    EXPECT_NEAR(f.coeff(3).real(), (c2 + c1 * c1) / 6.0, 1e-15);
}

TEST(Membership, KnownMembers) {
    EXPECT_TRUE(membership_check(SchlichtFunction(koebe(400), ClassTag::starlike)));
    TruncatedSeries half_plane(400);
    for (int n = 1; n <= 400; ++n) {
        half_plane.set(n, 1.0);
    }
    EXPECT_TRUE(membership_check(SchlichtFunction(half_plane, ClassTag::convex)));
}

TEST(Membership, RejectsLargeSecondCoefficientForConvex) {
    // f = z + 2 z^2: 1 + z f''/f' = 1 + 4z/(1 + 4z) is negative near z = -0.2.
    const TruncatedSeries f(std::vector<Complex>{0.0, 1.0, 2.0});
    EXPECT_FALSE(membership_check(SchlichtFunction(f, ClassTag::convex)));
}

TEST(Membership, GeneratedFunctionsPass) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto params = random_params(rng);
        // Level-3 extremal with the sampled p1, p2 scaled inside the disk.
        const DiskParams boundary(0.9 * params.p1(), 0.9 * params.p2(), std::polar(1.0, std::arg(params.p3() + 1e-3)));
        const auto p = boundary_p(boundary, BoundaryLevel::three, 600);
        EXPECT_TRUE(membership_check(starlike_from_p(p, 600)));
        EXPECT_TRUE(membership_check(convex_from_p(p, 600)));
    }
}

TEST(ClassesProperties, RecursionMatchesClosedForms) {
    std::mt19937_64 rng(500);
    for (int trial = 0; trial < 500; ++trial) {
        const auto c = coeffs_from_params(random_params(rng));
        const auto p = cara_polynomial(c, 12);
        for (const ClassTag tag : {ClassTag::convex, ClassTag::starlike}) {
            const auto f = function_from_p(tag, p, 12);
            const auto closed = closed_form_coeffs(tag, c);
            EXPECT_LE(std::abs(f.coeff(2) - closed.a2), 1e-12);
            EXPECT_LE(std::abs(f.coeff(3) - closed.a3), 1e-12);
            EXPECT_LE(std::abs(f.coeff(4) - closed.a4), 1e-12);
        }
    }
}

TEST(ClassesProperties, AlexanderRelation) {
    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = cara_polynomial(coeffs_from_params(random_params(rng)), 12);
        const auto star = starlike_from_p(p, 12);
        const auto conv = convex_from_p(p, 12);
        for (int n = 1; n <= 12; ++n) {
            EXPECT_LE(std::abs(star.coeff(n) - static_cast<double>(n) * conv.coeff(n)), 1e-12);
        }
    }
}
