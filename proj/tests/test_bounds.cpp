#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "koebe/bounds.hpp"
#include "koebe/verify.hpp"
#include "oracles.hpp"

using koebe::BoundPair;
using koebe::CandidateFunction;
using koebe::Complex;
using koebe::DiskPoint;
using koebe::OrderParameter;

namespace {

const OrderParameter kOne{1.0, 0.0};

}  // namespace

TEST(GrowthBounds, Examples) {
    const BoundPair at_zero = koebe::growth_bounds(DiskPoint{0.0, 0.0}, OrderParameter{0.3, 2.0});
    EXPECT_EQ(at_zero.lower, 0.0);
    EXPECT_EQ(at_zero.upper, 0.0);

    const BoundPair half = koebe::growth_bounds(DiskPoint{0.5, 0.0}, kOne);
    EXPECT_NEAR(half.lower, 1.0 / 4.5, 1e-15);
    EXPECT_NEAR(half.upper, 2.0, 1e-15);
    EXPECT_NEAR(std::abs(CandidateFunction::extremal(kOne).evaluate(DiskPoint{0.5, 0.0})), half.upper, 1e-15);
}

TEST(GrowthBounds, DependOnlyOnModulus) {
    const BoundPair a = koebe::growth_bounds(DiskPoint{0.0, 0.6}, OrderParameter{0.0, 2.0});
    const BoundPair b = koebe::growth_bounds(DiskPoint{-0.6, 0.0}, OrderParameter{2.0, 0.0});
    EXPECT_DOUBLE_EQ(a.lower, b.lower);
    EXPECT_DOUBLE_EQ(a.upper, b.upper);
}

TEST(AuxiliaryF, VanishesAtOriginWithUnitDerivative) {
    const DiskPoint v{0.5, 0.0};
    for (const auto& f : {CandidateFunction::identity(kOne), CandidateFunction::extremal(kOne),
                          CandidateFunction::extremal(OrderParameter{0.4, 0.3})}) {
        const Complex small = koebe::auxiliary_F(f, v, DiskPoint{1e-7, 0.0});
        EXPECT_LT(std::abs(small), 2e-7);
        EXPECT_LT(std::abs(small / 1e-7 - 1.0), 1e-5);
    }
}

TEST(AuxiliaryF, EqualityInstanceOfGrowthLowerBound) {
    const auto f = CandidateFunction::extremal(kOne);
    const DiskPoint z{-2.0 / 7.0, 0.0};
    const Complex F = koebe::auxiliary_F(f, DiskPoint{0.5, 0.0}, z);
    EXPECT_NEAR(std::abs(F), 14.0 / 81.0, 1e-14);
    EXPECT_NEAR(koebe::growth_bounds(z, kOne).lower, 14.0 / 81.0, 1e-15);
}

TEST(AuxiliaryF, IdentityHasNonzeroDerivativeAtOrigin) {
    const auto f = CandidateFunction::identity(OrderParameter{0.7, 0.0});
    const DiskPoint v{0.5, 0.0};
    auto g = [&](Complex w) { return koebe::auxiliary_F(f, v, DiskPoint{w}); };
    const Complex d = oracle::derivative(g, Complex{1e-3, 0.0}, 1e-7);
    EXPECT_NEAR(std::abs(d), 1.0, 1e-2);
}

TEST(AuxiliaryF, RejectsDegeneratePoints) {
    const auto f = CandidateFunction::extremal(kOne);
    EXPECT_THROW(koebe::auxiliary_F(f, DiskPoint{0.0, 0.0}, DiskPoint{0.2, 0.0}), koebe::DegenerateInput);
    EXPECT_THROW(koebe::auxiliary_F(f, DiskPoint{0.3, 0.2}, DiskPoint{-0.3, -0.2}), koebe::DegenerateInput);
}

TEST(AuxiliaryF, LogDerivativeMatchesFiniteDifference) {
    const OrderParameter orders[] = {kOne, OrderParameter{0.5, 0.0}, OrderParameter{0.6, -0.4}};
    for (const OrderParameter& b : orders) {
        for (const auto& f : {CandidateFunction::identity(b), CandidateFunction::extremal(b),
                              CandidateFunction::rotated(b, 2.0)}) {
            for (const Complex& v : koebe::auxiliary_panel()) {
                for (const Complex z : {Complex{0.3, 0.1}, Complex{-0.2, 0.5}, Complex{0.6, -0.6}}) {
                    auto g = [&](Complex w) { return koebe::auxiliary_F(f, DiskPoint{v}, DiskPoint{w}); };
                    const Complex fd = z * oracle::derivative(g, z) / g(z);
                    const Complex closed = koebe::auxiliary_log_derivative(f, DiskPoint{v}, DiskPoint{z});
                    EXPECT_LT(std::abs(closed - fd), 1e-7 * std::max(1.0, std::abs(fd)));
                }
            }
            EXPECT_EQ(koebe::auxiliary_log_derivative(f, DiskPoint{0.4, 0.1}, DiskPoint{0.0, 0.0}), Complex(1.0, 0.0));
        }
    }
}

TEST(TwoPointBounds, WorkedExample) {
    const DiskPoint u{0.25, 0.0};
    const DiskPoint v{0.5, 0.0};
    const BoundPair p = koebe::two_point_bounds(u, v, kOne);
    EXPECT_NEAR(p.lower, 2.0 / 9.0, 1e-15);
    EXPECT_NEAR(p.upper, 0.72, 1e-15);
    const BoundPair c = koebe::two_point_check(CandidateFunction::extremal(kOne), u, v);
    EXPECT_NEAR(*c.middle, 2.0 / 9.0, 1e-15);
    EXPECT_NEAR(*c.middle, c.lower, 1e-15);
}

TEST(TwoPointBounds, HalfOrderExample) {
    // Exponent 2b = 1: 2(0.25)(0.75) / (1.5 (0.5) 0.875^-1 (1.125)^2) = 28/81
    const BoundPair p = koebe::two_point_bounds(DiskPoint{0.25, 0.0}, DiskPoint{0.5, 0.0}, OrderParameter{0.5, 0.0});
    EXPECT_NEAR(p.lower, 28.0 / 81.0, 1e-15);
    EXPECT_NEAR(p.upper, 1.12, 1e-14);
    EXPECT_NEAR(p.lower, oracle::two_point_member(0.25, 0.5, 0.5, true), 1e-15);
}

TEST(TwoPointBounds, MatchesTypedInFormula) {
    koebe::DiskSampler sampler(99);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> breal(0.05, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const DiskPoint u = sampler.next();
        const DiskPoint v = sampler.next();
        const double b = breal(rng);
        const BoundPair p = koebe::two_point_bounds(u, v, OrderParameter{b, 0.0});
        const double lo = oracle::two_point_member(u.value(), v.value(), b, true);
        const double hi = oracle::two_point_member(u.value(), v.value(), b, false);
        EXPECT_NEAR(p.lower, lo, 1e-11 * lo);
        EXPECT_NEAR(p.upper, hi, 1e-10 * hi);
    }
}

TEST(TwoPointBounds, RejectsDegenerateInputs) {
    const DiskPoint a{0.3, 0.1};
    const DiskPoint zero{0.0, 0.0};
    EXPECT_THROW(koebe::two_point_bounds(a, a, kOne), koebe::DegenerateInput);
    EXPECT_THROW(koebe::two_point_bounds(a, zero, kOne), koebe::DegenerateInput);
    EXPECT_THROW(koebe::two_point_bounds(zero, a, kOne), koebe::DegenerateInput);
    EXPECT_THROW(koebe::two_point_bounds_via_growth(a, a, kOne), koebe::DegenerateInput);
}

TEST(TwoPointBounds, LowerBelowUpper) {
    koebe::DiskSampler sampler(4);
    for (int i = 0; i < 10000; ++i) {
        const DiskPoint u = sampler.next();
        const DiskPoint v = sampler.next();
        const double cross = std::abs(1.0 - u.value() * std::conj(v.value()));
        const double gap = std::abs(u.value() - v.value());
        EXPECT_GT(cross - gap, 0.0);
        const BoundPair p = koebe::two_point_bounds(u, v, OrderParameter{0.4, 0.9});
        EXPECT_LT(p.lower, p.upper);
    }
}

TEST(TwoPointBounds, EquivalentToGrowthRoute) {
    koebe::DiskSampler sampler(2024);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int i = 0; i < 10000; ++i) {
        const DiskPoint u = sampler.next();
        const DiskPoint v = sampler.next();
        Complex b{d(rng), d(rng)};
        if (std::abs(b) < 1e-3) {
            b = 1.0;
        }
        const BoundPair direct = koebe::two_point_bounds(u, v, OrderParameter{b});
        const BoundPair routed = koebe::two_point_bounds_via_growth(u, v, OrderParameter{b});
        EXPECT_NEAR(direct.lower, routed.lower, 1e-10 * direct.lower);
        EXPECT_NEAR(direct.upper, routed.upper, 1e-10 * direct.upper);
    }
}

TEST(TwoPointBounds, SandwichForStarlikeCandidates) {
    koebe::DiskSampler sampler(31);
    for (const auto& f : {CandidateFunction::identity(kOne), CandidateFunction::extremal(kOne),
                          CandidateFunction::rotated(kOne, 1.7)}) {
        for (int i = 0; i < 5000; ++i) {
            const DiskPoint u = sampler.next();
            const DiskPoint v = sampler.next();
            const BoundPair p = koebe::two_point_check(f, u, v);
            EXPECT_GE(*p.middle, p.lower * (1.0 - 1e-10));
            EXPECT_LE(*p.middle, p.upper * (1.0 + 1e-10));
        }
    }
}

TEST(TwoPointBounds, SharpOnPositiveRealAxis) {
    const auto f = CandidateFunction::extremal(kOne);
    for (double small : {0.05, 0.2, 0.45, 0.7}) {
        for (double large : {0.5, 0.8, 0.93}) {
            if (small >= large) {
                continue;
            }
            const BoundPair below = koebe::two_point_check(f, DiskPoint{small, 0.0}, DiskPoint{large, 0.0});
            EXPECT_NEAR(*below.middle, below.lower, 1e-10 * below.lower);
            const BoundPair above = koebe::two_point_check(f, DiskPoint{large, 0.0}, DiskPoint{small, 0.0});
            EXPECT_NEAR(*above.middle, above.upper, 1e-10 * above.upper);
        }
    }
}

// For |b| < 1 both members tend to 2/(1+|b|) > 1 as u -> v while |f(u)/f(v)| -> 1,
// so no function satisfies the lower bound near the diagonal.
TEST(TwoPointBounds, LowerBoundExceedsOneNearDiagonalWhenOrderBelowOne) {
    const DiskPoint v{0.3, 0.2};
    const DiskPoint u{0.3 + 1e-7, 0.2};
    for (double b : {0.5, 0.75}) {
        const BoundPair p = koebe::two_point_check(CandidateFunction::extremal(OrderParameter{b, 0.0}), u, v);
        EXPECT_NEAR(p.lower, 2.0 / (1.0 + b), 1e-5);
        EXPECT_NEAR(*p.middle, 1.0, 1e-5);
        EXPECT_GT(p.lower, *p.middle);
    }
    const BoundPair unit = koebe::two_point_bounds(u, v, kOne);
    EXPECT_NEAR(unit.lower, 1.0, 1e-5);
    EXPECT_NEAR(unit.upper, 1.0, 1e-5);
}
