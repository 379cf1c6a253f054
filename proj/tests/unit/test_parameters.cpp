#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "biphase/diagnostics.hpp"
#include "biphase/errors.hpp"
#include "biphase/parameters.hpp"
#include "biphase/phases.hpp"

using namespace biphase;

TEST(Parameters, AcceptsReferenceConstants) {
    const auto p = make_parameters(1.0, 1.5, 0.1, 0.5, 1.0, 1.0);
    EXPECT_EQ(p.alpha(), 1.0);
    EXPECT_EQ(p.beta(), 1.5);
    EXPECT_EQ(p.eps(), 0.1);
    EXPECT_EQ(p.pi_t(), 0.5);
    EXPECT_EQ(p.pi_c(), 1.0);
    EXPECT_EQ(p.e33(), 1.0);
    EXPECT_EQ(p, reference_parameters(0.1));
}

TEST(Parameters, RejectsNonPositiveCoefficients) {
    EXPECT_THROW(make_parameters(1.0, 1.5, 0.0, 0.5, 1.0), ValidationError);
    EXPECT_THROW(make_parameters(-1.0, 1.5, 0.1, 0.5, 1.0), ValidationError);
    EXPECT_THROW(make_parameters(1.0, 0.0, 0.1, 0.5, 1.0), ValidationError);
    EXPECT_THROW(make_parameters(1.0, 1.5, 0.1, 0.5, 1.0, -2.0), ValidationError);
    EXPECT_THROW(make_parameters(1.0, 1.5, 0.1, NAN, 1.0), ValidationError);
    try {
        make_parameters(-1.0, 1.5, 0.1, 0.5, 1.0);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("alpha"), std::string::npos);
    }
}

TEST(Parameters, LargeEpsOnlyWarns) {
    std::vector<std::string> seen;
    ScopedWarningHandler capture([&](std::string_view m) { seen.emplace_back(m); });
    const auto p = make_parameters(1.0, 1.5, 2.0, 0.5, 1.0);
    EXPECT_EQ(p.eps(), 2.0);
    ASSERT_EQ(seen.size(), 1u);
    EXPECT_NE(seen[0].find("eps"), std::string::npos);
}

TEST(DerivedConstants, ReferenceValues) {
    const auto c = derive_constants(reference_parameters());
    EXPECT_NEAR(c.gamma, 1.8027756377319946, 1e-15);
    EXPECT_NEAR(c.kappa, -5.0 / 13.0, 1e-16);
    EXPECT_EQ(c.q_bc, -0.25);
    EXPECT_EQ(c.p_bc, 0.75);
}

TEST(DerivedConstants, EqualCouplingsDecouple) {
    EXPECT_EQ(derive_constants(make_parameters(2.0, 2.0, 0.1, 0.0, 1.0)).kappa, 0.0);
}

TEST(DerivedConstants, PermeabilityScalesGamma) {
    const auto c = derive_constants(make_parameters(3.0, 4.0, 0.1, 0.0, 1.0, 4.0));
    EXPECT_DOUBLE_EQ(c.gamma, 2.5);
}

TEST(DerivedConstants, RandomizedInvariants) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pos(1e-3, 1e3);
    std::uniform_real_distribution<double> data(-10.0, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        const double a = pos(rng), b = pos(rng), e33 = pos(rng);
        const double pt = data(rng), pc = data(rng);
        const auto p = make_parameters(a, b, 0.1, pt, pc, e33);
        const auto c = derive_constants(p);
        EXPECT_GT(c.gamma, 0.0);
        EXPECT_NEAR(c.gamma * c.gamma * e33, a * a + b * b, 1e-13 * (a * a + b * b));
        EXPECT_LT(std::abs(c.kappa), 1.0);
        const auto swapped = derive_constants(make_parameters(b, a, 0.1, pt, pc, e33));
        EXPECT_EQ(c.kappa, -swapped.kappa);
    }
}

TEST(DerivedConstants, BoundaryDataInvolutionIsExactOnDyadicValues) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> k(-4096, 4096);
    for (int trial = 0; trial < 500; ++trial) {
        const double pt = k(rng) / 64.0, pc = k(rng) / 64.0;
        const auto c = derive_constants(make_parameters(1.0, 1.5, 0.1, pt, pc));
        EXPECT_EQ(c.q_bc + c.p_bc, pt);
        EXPECT_EQ(c.p_bc - c.q_bc, pc);
    }
}

TEST(Phases, ConstantFields) {
    const Grid g(8);
    const auto zero = to_phases(RadialField::constant(g, 0.0), RadialField::constant(g, 3.0));
    for (double v : zero.pt.values()) EXPECT_EQ(v, 3.0);
    for (double v : zero.pc.values()) EXPECT_EQ(v, 3.0);

    const auto ab = to_phases(RadialField::constant(g, 0.5), RadialField::constant(g, 2.0));
    for (double v : ab.pt.values()) EXPECT_EQ(v, 2.5);
    for (double v : ab.pc.values()) EXPECT_EQ(v, 1.5);
}

TEST(Phases, RoundTripIsIdentityOnDyadicSamples) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> k(-1 << 20, 1 << 20);
    const Grid g(64);
    for (int trial = 0; trial < 50; ++trial) {
        const auto q = RadialField::sample(g, [&](double) { return k(rng) / 1024.0; });
        const auto p = RadialField::sample(g, [&](double) { return k(rng) / 1024.0; });
        const auto phases = to_phases(q, p);
        const auto back = from_phases(phases.pt, phases.pc);
        for (std::size_t i = 0; i < g.size(); ++i) {
            EXPECT_EQ(back.q[i], q[i]);
            EXPECT_EQ(back.p[i], p[i]);
        }
    }
}

TEST(Phases, RoundTripWithinRoundingOnArbitrarySamples) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Grid g(128);
    const auto q = RadialField::sample(g, [&](double) { return u(rng); });
    const auto p = RadialField::sample(g, [&](double) { return u(rng); });
    const auto phases = to_phases(q, p);
    const auto back = from_phases(phases.pt, phases.pc);
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_NEAR(back.q[i], q[i], 4e-16);
        EXPECT_NEAR(back.p[i], p[i], 4e-16);
    }
}

TEST(Phases, GridMismatchThrows) {
    EXPECT_THROW(to_phases(RadialField::constant(Grid(8), 0.0), RadialField::constant(Grid(9), 0.0)),
                 ValidationError);
}
