#include "loghankel/series.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace loghankel;
using loghankel::testing::koebe;
using loghankel::testing::random_in_disk;
using loghankel::testing::random_normalized;

namespace {

TruncatedSeries poly(std::vector<Complex> c) { return TruncatedSeries(std::move(c)); }

// Plain double loop over all index pairs, kept apart from multiply().
std::vector<Complex> convolution_oracle(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
    std::vector<Complex> out(order + 1);
    for (int i = 0; i <= a.order(); ++i) {
        for (int j = 0; j <= b.order(); ++j) {
            if (i + j <= order) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

} // namespace

TEST(TruncatedSeries, RejectsBadConstruction) {
    EXPECT_THROW(TruncatedSeries(0), DomainError);
    EXPECT_THROW(poly({1.0}), DomainError);
    EXPECT_THROW(poly({1.0, Complex(std::nan(""), 0.0)}), DomainError);
    TruncatedSeries s(3);
    EXPECT_THROW(s.set(1, Complex(INFINITY, 0.0)), DomainError);
    EXPECT_EQ(s.coeffs().size(), 4u);
}

TEST(Multiply, DifferenceOfSquares) {
    const auto r = multiply(poly({1, 1, 0, 0}), poly({1, -1, 0, 0}));
    EXPECT_EQ(r, poly({1, 0, -1, 0}));
}

TEST(Multiply, IdentitySquared) {
    const auto r = multiply(TruncatedSeries::identity(4), TruncatedSeries::identity(4));
    EXPECT_EQ(r, poly({0, 0, 1, 0, 0}));
}

TEST(Multiply, TruncatesToSmallerOrder) {
    const auto r = multiply(poly({1, 1}), poly({1, 1, 1, 1}));
    EXPECT_EQ(r.order(), 1);
}

TEST(Multiply, MatchesConvolutionOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries a(9);
        TruncatedSeries b(9);
        for (int n = 0; n <= 9; ++n) {
            a.set(n, random_in_disk(rng, 2.0));
            b.set(n, random_in_disk(rng, 2.0));
        }
        const auto expected = convolution_oracle(a, b, 9);
        const auto got = multiply(a, b);
        for (int n = 0; n <= 9; ++n) {
            EXPECT_NEAR(std::abs(got[n] - expected[n]), 0.0, 1e-12);
        }
    }
}

TEST(Compose, IdentityOnTheRight) {
    const auto f = poly({0, 1, 1, 0});
    EXPECT_EQ(compose(f, TruncatedSeries::identity(3)), f);
}

TEST(Compose, Scaling) {
    EXPECT_EQ(compose(poly({0, 0, 1, 0}), poly({0, 2, 0, 0})), poly({0, 0, 4, 0}));
}

TEST(Compose, RejectsNonzeroConstantTerm) {
    EXPECT_THROW(compose(poly({0, 1, 1}), poly({1, 1, 0})), DomainError);
}

TEST(Compose, KoebeWithItsInverse) {
    const auto f = koebe(5);
    const auto id = compose(f, revert(f));
    EXPECT_LT(max_abs_diff(id, TruncatedSeries::identity(5)), 1e-10);
}

TEST(Revert, KoebeInverseCoefficients) {
    const auto g = revert(koebe(12));
    EXPECT_NEAR(std::abs(g[2] - Complex(-2.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(g[3] - Complex(5.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(g[4] - Complex(-14.0)), 0.0, 1e-12);
    // Loewner: |A_n| = (2n)! / (n! (n+1)!) for the Koebe inverse.
    EXPECT_NEAR(g[5].real(), 42.0, 1e-9);
    EXPECT_NEAR(g[6].real(), -132.0, 1e-9);
}

TEST(Revert, IdentityIsSelfInverse) {
    EXPECT_EQ(revert(TruncatedSeries::identity(6)), TruncatedSeries::identity(6));
}

TEST(Revert, QuadraticByHand) {
    // w = g + g^2 solved order by order: A_2 = -1, A_3 = 2, A_4 = -5.
    const auto g = revert(poly({0, 1, 1, 0, 0}));
    EXPECT_NEAR(std::abs(g[2] - Complex(-1.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(g[3] - Complex(2.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(g[4] - Complex(-5.0)), 0.0, 1e-14);
}

TEST(Revert, RejectsUnnormalized) {
    EXPECT_THROW(revert(poly({0, 2, 1})), DomainError);
    EXPECT_THROW(revert(poly({0.5, 1, 1})), DomainError);
}

TEST(LogRatio, KoebeHalfCoefficientsAreReciprocals) {
    const auto l = log_ratio(koebe(11));
    ASSERT_EQ(l.order(), 10);
    EXPECT_EQ(l[0], Complex{});
    for (int n = 1; n <= 10; ++n) {
        EXPECT_NEAR(std::abs(l[n] / 2.0 - Complex(1.0 / n)), 0.0, 1e-12) << n;
    }
}

TEST(LogRatio, IdentityGivesZero) {
    const auto l = log_ratio(TruncatedSeries::identity(6));
    for (const Complex c : l.coeffs()) {
        EXPECT_EQ(c, Complex{});
    }
}

TEST(LogRatio, QuadraticMatchesClosedForms) {
    const Complex a2(0.7, -0.3);
    const auto l = log_ratio(poly({0, 1, a2, 0, 0}));
    EXPECT_NEAR(std::abs(l[1] / 2.0 - a2 / 2.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(l[2] / 2.0 + a2 * a2 / 4.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(l[3] / 2.0 - a2 * a2 * a2 / 6.0), 0.0, 1e-14);
}

TEST(LogRatio, RequiresOrderTwo) { EXPECT_THROW(log_ratio(TruncatedSeries::identity(1)), DomainError); }

TEST(Derivative, Basics) {
    EXPECT_EQ(derivative(poly({0, 1, 1})), poly({1, 2}));
    const auto d = derivative(TruncatedSeries::constant(1.0, 3));
    for (const Complex c : d.coeffs()) {
        EXPECT_EQ(c, Complex{});
    }
}

TEST(Derivative, MatchesCentralDifferences) {
    std::mt19937_64 rng(5);
    const auto f = random_normalized(rng, 8);
    const auto df = derivative(f);
    const double h = 1e-5;
    for (int k = 0; k < 5; ++k) {
        const Complex z = random_in_disk(rng, 0.8);
        const Complex fd = (f.evaluate(z + h) - f.evaluate(z - h)) / (2.0 * h);
        EXPECT_LE(std::abs(fd - df.evaluate(z)) / std::abs(df.evaluate(z)), 1e-6);
    }
}

TEST(Divide, GeometricSeries) {
    const auto q = divide(TruncatedSeries::constant(1.0, 5), poly({1, -1, 0, 0, 0, 0}));
    for (int n = 0; n <= 5; ++n) {
        EXPECT_EQ(q[n], Complex(1.0));
    }
    EXPECT_THROW(divide(poly({1, 1}), poly({0, 1})), DomainError);
}

TEST(SeriesProperties, ComposeRevertRoundTrip) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_normalized(rng, 10);
        const auto id = compose(f, revert(f));
        EXPECT_LE(max_abs_diff(id, TruncatedSeries::identity(10)), 1e-9);
    }
}

TEST(SeriesProperties, ExpOfLogRatioRebuildsFunction) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_normalized(rng, 10);
        const auto e = exp_series(log_ratio(f));
        // z * exp(log(f/z)) = f
        TruncatedSeries rebuilt(10);
        for (int n = 0; n < 10; ++n) {
            rebuilt.set(n + 1, e[n]);
        }
        EXPECT_LE(max_abs_diff(rebuilt, f), 1e-9);
    }
}

TEST(SeriesProperties, DoubleReversionIsIdentity) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_normalized(rng, 10);
        EXPECT_LE(max_abs_diff(revert(revert(f)), f), 1e-9);
    }
}
