#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "biphase/diagnostics.hpp"
#include "biphase/errors.hpp"
#include "biphase/exact.hpp"
#include "biphase/fd_solver.hpp"

using namespace biphase;

namespace {

double max_error_q(const Parameters& p, const Grid& g) {
    const auto q = solve_q_fd(p, g);
    return max_abs_difference(q, RadialField::sample(g, [&](double r) { return exact_q(p, r); }));
}

}  // namespace

TEST(Grid, NodesAndSpacing) {
    const Grid g(10);
    EXPECT_EQ(g.size(), 11u);
    EXPECT_EQ(g.node(0), 0.0);
    EXPECT_EQ(g.node(10), 1.0);
    EXPECT_DOUBLE_EQ(g.dr() * 10, 1.0);
    const auto r = g.nodes();
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_GT(r[i], r[i - 1]);
    EXPECT_THROW(Grid(7), ValidationError);
}

TEST(Grid, ResolvingRule) {
    const double gamma = derive_constants(reference_parameters()).gamma;
    const Grid g = Grid::resolving(gamma, 0.04);
    EXPECT_LE(g.dr(), 0.04 / (10 * gamma));
    EXPECT_GT(1.0 / (g.intervals() - 1), 0.04 / (10 * gamma));
}

TEST(RadialField, RejectsBadSamples) {
    EXPECT_THROW(RadialField(Grid(8), std::vector<double>(8)), ValidationError);
    std::vector<double> v(9, 0.0);
    v[3] = INFINITY;
    EXPECT_THROW(RadialField(Grid(8), v), ValidationError);
}

TEST(AssembleQ, DirichletAndNeumannRows) {
    const auto p = reference_parameters(0.1);
    const auto s = assemble_q_system(p, Grid(8));
    EXPECT_EQ(s.diag[8], 1.0);
    EXPECT_EQ(s.sub[8], 0.0);
    EXPECT_EQ(s.rhs[8], -0.25);
    EXPECT_EQ(s.diag[0], -3.0);
    EXPECT_EQ(s.super[0], 4.0);
    EXPECT_EQ(s.corner, -1.0);
    // row 1 has no r_0 coupling
    EXPECT_EQ(s.sub[1], 0.0);
}

TEST(SolveQ, EqualDataGivesZero) {
    const auto q = solve_q_fd(make_parameters(1.0, 1.5, 0.1, 0.4, 0.4), Grid(200));
    for (double v : q.values()) EXPECT_EQ(v, 0.0);
}

TEST(SolveQ, SecondOrderAgainstClosedForm) {
    const auto p = reference_parameters(0.1);
    const double e1 = max_error_q(p, Grid(1000));
    const double e2 = max_error_q(p, Grid(2000));
    const double e3 = max_error_q(p, Grid(4000));
    EXPECT_GT(e1 / e2, 3.5);
    EXPECT_LT(e1 / e2, 4.5);
    EXPECT_GT(e2 / e3, 3.5);
    EXPECT_LT(e2 / e3, 4.5);
    // error constant: e <= C dr^2 with C ~ O(gamma^2 / eps^2)
    EXPECT_LT(e1, 1e3 * 1e-6);
}

TEST(SolveQ, BoundaryValueIsExact) {
    const auto q = solve_q_fd(reference_parameters(0.07), Grid(1000));
    EXPECT_EQ(q.back(), -0.25);
}

TEST(SolveQ, InteriorNegligibleAtSmallEps) {
    const auto p = reference_parameters(0.04);
    const Grid g(10000);
    const auto q = solve_q_fd(p, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double r = g.node(i);
        if (r <= 0.2) EXPECT_LT(std::abs(q[i]), 1e-15) << r;
        if (r < 0.5) EXPECT_LT(std::abs(q[i]), 1e-10) << r;
    }
}

TEST(SolveQ, WarnsWhenLayerUnresolved) {
    std::vector<std::string> seen;
    ScopedWarningHandler capture([&](std::string_view m) { seen.emplace_back(m); });
    solve_q_fd(reference_parameters(0.04), Grid(100));
    ASSERT_EQ(seen.size(), 1u);
    EXPECT_NE(seen[0].find("unresolved"), std::string::npos);
    seen.clear();
    solve_q_fd(reference_parameters(0.04), Grid(10000));
    EXPECT_TRUE(seen.empty());
}

TEST(SolveQ, SignPreservation) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double pc = u(rng);
        const auto p = make_parameters(u(rng), u(rng), 0.05, pc + u(rng), pc);
        const auto q = solve_q_fd(p, Grid(2000));
        for (std::size_t i = 1; i < q.size(); ++i) EXPECT_GE(q[i], 0.0);
    }
}

TEST(SolveQ, Superposition) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const Grid g(3000);
    for (int trial = 0; trial < 5; ++trial) {
        const double t1 = u(rng), c1 = u(rng), t2 = u(rng), c2 = u(rng);
        const auto base = reference_parameters(0.05);
        const auto a = solve_decoupled_fd(base.with_boundary(t1, c1), g);
        const auto b = solve_decoupled_fd(base.with_boundary(t2, c2), g);
        const auto s = solve_decoupled_fd(base.with_boundary(t1 + t2, c1 + c2), g);
        double scale = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) scale = std::max(scale, std::abs(s.p[i]));
        for (std::size_t i = 0; i < g.size(); ++i) {
            EXPECT_NEAR(s.q[i], a.q[i] + b.q[i], 1e-12 * scale);
            EXPECT_NEAR(s.p[i], a.p[i] + b.p[i], 1e-12 * scale);
        }
    }
}

TEST(SolveP, EqualCouplingsGiveConstant) {
    const auto p = make_parameters(1.3, 1.3, 0.1, 0.5, 1.0);
    const Grid g(500);
    const auto q = solve_q_fd(p, g);
    const auto mean = solve_p_fd(p, g, q);
    for (double v : mean.values()) EXPECT_NEAR(v, 0.75, 1e-12);
}

TEST(SolveP, ZeroSourceGivesConstant) {
    const auto p = reference_parameters(0.1);
    const Grid g(500);
    const auto mean = solve_p_fd(p, g, RadialField::constant(g, 0.0));
    for (double v : mean.values()) EXPECT_NEAR(v, 0.75, 1e-12);
}

TEST(SolveP, GridMismatchRejected) {
    const auto p = reference_parameters(0.1);
    EXPECT_THROW(solve_p_fd(p, Grid(100), RadialField::constant(Grid(50), 0.0)), ValidationError);
}

TEST(SolveP, SecondOrderAgainstClosedForm) {
    const auto p = reference_parameters(0.1);
    std::vector<double> errors;
    for (std::size_t n : {1000u, 2000u, 4000u}) {
        const Grid g(n);
        const auto fd = solve_decoupled_fd(p, g);
        errors.push_back(max_abs_difference(
            fd.p, RadialField::sample(g, [&](double r) { return exact_p(p, r); })));
    }
    EXPECT_GT(errors[0] / errors[1], 3.5);
    EXPECT_LT(errors[0] / errors[1], 4.5);
    EXPECT_GT(errors[1] / errors[2], 3.5);
    EXPECT_LT(errors[1] / errors[2], 4.5);
}

TEST(SolveCoupled, MatchesDecoupledRoute) {
    const auto p = reference_parameters(0.1);
    const Grid g(2000);
    const auto full = solve_coupled_fd(p, g);
    const auto split = solve_decoupled_fd(p, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_NEAR(full.pt[i] - full.pc[i], 2 * split.q[i], 1e-11);
        EXPECT_NEAR(full.pt[i] + full.pc[i], 2 * split.p[i], 1e-11);
    }
}

TEST(SolveCoupled, BoundaryNodesExact) {
    const auto full = solve_coupled_fd(reference_parameters(0.05), Grid(1000));
    EXPECT_EQ(full.pt.back(), 0.5);
    EXPECT_EQ(full.pc.back(), 1.0);
}

TEST(SolveCoupled, UniformDataStaysUniform) {
    const auto full = solve_coupled_fd(make_parameters(2.0, 2.0, 0.1, 0.6, 0.6), Grid(400));
    for (std::size_t i = 0; i < full.pt.size(); ++i) {
        EXPECT_NEAR(full.pt[i], 0.6, 1e-12);
        EXPECT_NEAR(full.pc[i], 0.6, 1e-12);
    }
}
