// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "biphase/analysis.hpp"
#include "biphase/diagnostics.hpp"
#include "biphase/exact.hpp"
#include "biphase/expansion.hpp"
#include "biphase/fd_solver.hpp"
#include "runner/experiments.hpp"
#include "runner/run_config.hpp"

using namespace biphase;
using Rational = boost::multiprecision::cpp_rational;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += "[failed: " + what + "] ";
        }
    }
    void note(const std::string& s) { detail += s + " "; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

double max_abs(const RadialField& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("biphase_acceptance_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

Outcome fd_order() {
    Outcome out;
    const auto params = reference_parameters(0.1);
    std::vector<double> eq;
    std::vector<double> ep;
    for (std::size_t n : {2500u, 5000u, 10000u, 20000u}) {
        const Grid g(n);
        const auto q = solve_q_fd(params, g);
        const auto p = solve_p_fd(params, g, q);
        eq.push_back(max_abs_difference(q, RadialField::sample(g, [&](double r) { return exact_q(params, r); })));
        ep.push_back(max_abs_difference(p, RadialField::sample(g, [&](double r) { return exact_p(params, r); })));
    }
    for (std::size_t i = 1; i < eq.size(); ++i) {
        const double rq = eq[i - 1] / eq[i];
        const double rp = ep[i - 1] / ep[i];
        out.note("q " + fmt(rq) + ", p " + fmt(rp) + ";");
        out.require(rq >= 3.5 && rq <= 4.5, "q ratio " + fmt(rq));
        out.require(rp >= 3.5 && rp <= 4.5, "p ratio " + fmt(rp));
    }
    return out;
}

Outcome profile_layer() {
    Outcome out;
    runner::RunConfig cfg;
    cfg.eps_list = {0.1, 0.07, 0.04};
    cfg.grid_n = 10000;
    cfg.output_dir = scratch("profiles");
    runner::run_profiles(cfg);

    std::ifstream in(cfg.output_dir / "profiles_0.04.csv");
    std::string line;
    std::getline(in, line);
    const double monophase = monophase_value(cfg.parameters(0.04));
    out.require(std::abs(monophase - 0.653846) < 1e-6, "monophase " + fmt(monophase));
    double q_max = 0.0;
    double p_dev = 0.0;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::vector<double> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
        if (cells[0] >= 0.5) continue;
        ++rows;
        // r, q_fd, q_exact, q_approx, p_fd, p_exact, p_approx
        q_max = std::max({q_max, std::abs(cells[1]), std::abs(cells[2])});
        p_dev = std::max({p_dev, std::abs(cells[4] - 0.653846), std::abs(cells[5] - 0.653846)});
    }
    out.note("rows " + std::to_string(rows) + ", max|q| " + fmt(q_max) + ", max|p-0.653846| " +
             fmt(p_dev));
    out.require(rows == 5000, "expected 5000 interior rows");
    out.require(q_max < 1e-6, "|q| bound");
    out.require(p_dev < 1e-6, "p near monophase");
    return out;
}

Outcome convergence_rates() {
    Outcome out;
    const auto eps = geometric_sweep(0.1, 0.01, 10);
    const auto base = reference_parameters(0.1);
    const auto one = convergence_study(base, eps, 1);
    const auto zero = convergence_study(base, eps, 0);
    auto check = [&](const std::optional<LineFit>& fit, const std::string& name, double lo,
                     double hi) {
        if (!fit) {
            out.require(false, name + " undefined");
            return;
        }
        out.note(name + " " + fmt(fit->slope) + ";");
        out.require(fit->slope >= lo && fit->slope <= hi, name);
    };
    check(one.l2_q, "k1 L2 q", 2.0, INFINITY);
    check(one.l2_p, "k1 L2 p", 2.0, INFINITY);
    check(one.h1_q, "k1 H1 q", 1.3, 1.8);
    check(one.h1_p, "k1 H1 p", 1.3, 1.8);
    check(zero.l2_q, "k0 L2 q", 1.0, INFINITY);
    check(zero.l2_p, "k0 L2 p", 1.0, INFINITY);
    check(zero.h1_q, "k0 H1 q", 0.35, 0.7);
    check(zero.h1_p, "k0 H1 p", 0.35, 0.7);
    return out;
}

Outcome interior_decay() {
    Outcome out;
    const auto rep = decay_study(reference_parameters(0.1), geometric_sweep(0.1, 0.01, 10), 0.3);
    out.require(rep.l2_fit.has_value(), "slope defined");
    if (rep.l2_fit) {
        const double target = -0.5408;
        out.note("slope " + fmt(rep.l2_fit->slope) + " vs " + fmt(target));
        out.require(std::abs(rep.l2_fit->slope - target) <= 0.1 * std::abs(target), "within 10%");
    }
    return out;
}

template <typename T>
bool identities_hold(const BasicExpansionSet<T>& set, const T& q_bc) {
    bool ok = set.q_profiles.size() == static_cast<std::size_t>(set.order + 1);
    for (int k = 0; k <= set.order && ok; ++k) {
        const auto& q = set.q_profiles[static_cast<std::size_t>(k)];
        ok = ok && set.p_profiles[static_cast<std::size_t>(k)] == q.scaled(set.kappa);
        const auto rhs = k == 0 ? BasicPolyExp<T>(set.gamma)
                                : profile_rhs(set.q_profiles, set.curvature, k);
        ok = ok && (profile_operator(q) - rhs).is_zero();
        ok = ok && q.polynomial(T(0)) == (k == 0 ? q_bc : T(0));
    }
    return ok;
}

Outcome profile_identities() {
    Outcome out;
    // alpha = 3, beta = 4: gamma = 5, kappa = -7/25
    const Rational gamma(5), kappa(-7, 25);
    int cases = 0;
    for (auto [pt, pc] : {std::pair<Rational, Rational>{Rational(1, 2), Rational(1)},
                          {Rational(3), Rational(-2, 7)},
                          {Rational(1), Rational(1)}}) {
        for (int k = 0; k <= 6; ++k) {
            const Rational q_bc = (pt - pc) / 2;
            const auto set = build_expansion<Rational>(gamma, kappa, q_bc, (pt + pc) / 2, k);
            out.require(identities_hold(set, q_bc), "rational order " + std::to_string(k));
            ++cases;
        }
    }
    const auto params = reference_parameters(0.1);
    const auto set = build_expansion(params, 6);
    bool p_scaled = true;
    for (std::size_t j = 0; j < set.q_profiles.size(); ++j) {
        p_scaled = p_scaled && set.p_profiles[j] == set.q_profiles[j].scaled(set.kappa);
    }
    out.require(p_scaled, "double p = kappa q");
    out.require(set.q_profiles[0].polynomial(0.0) == -0.25, "double q0 trace");
    for (std::size_t j = 1; j < set.q_profiles.size(); ++j) {
        out.require(set.q_profiles[j].polynomial(0.0) == 0.0, "double trace " + std::to_string(j));
    }
    out.note(std::to_string(cases) + " rational expansions, orders 0..6");
    return out;
}

Outcome coupled_equivalence() {
    Outcome out;
    const auto params = reference_parameters(0.1);
    const Grid g(10000);
    const auto full = solve_coupled_fd(params, g);
    const auto decoupled = solve_decoupled_fd(params, g);
    const auto split = to_phases(decoupled.q, decoupled.p);
    const double rt = max_abs_difference(full.pt, split.pt) / max_abs(full.pt);
    const double rc = max_abs_difference(full.pc, split.pc) / max_abs(full.pc);
    out.note("p_t " + fmt(rt) + ", p_c " + fmt(rc));
    out.require(rt <= 1e-10 && rc <= 1e-10, "relative max difference");
    return out;
}

Outcome properties() {
    Outcome out;
    const auto base = reference_parameters(0.05);
    const auto g = Grid::resolving(derive_constants(base).gamma, 0.05, 40, 4000);

    // superposition of boundary data
    const auto a = solve_coupled_fd(base.with_boundary(0.5, 1.0), g);
    const auto b = solve_coupled_fd(base.with_boundary(-2.0, 0.25), g);
    const auto s = solve_coupled_fd(base.with_boundary(-1.5, 1.25), g);
    double lin = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        lin = std::max({lin, std::abs(s.pt[i] - a.pt[i] - b.pt[i]),
                        std::abs(s.pc[i] - a.pc[i] - b.pc[i])});
    }
    lin /= std::max(max_abs(s.pt), max_abs(s.pc));
    out.note("linearity " + fmt(lin) + ";");
    out.require(lin <= 1e-12, "linearity");

    // sign of discrete q follows q_bc
    bool signs = true;
    for (double eps : {0.1, 0.04, 0.01}) {
        const auto p = reference_parameters(eps);
        const auto grid = Grid::resolving(derive_constants(p).gamma, eps, 20, 2000);
        for (double sign : {1.0, -1.0}) {
            const auto q = solve_q_fd(p.with_boundary(0.75 + 0.25 * sign, 0.75 - 0.25 * sign), grid);
            for (double v : q.values()) signs = signs && v * sign >= 0.0;
            signs = signs && q.back() * sign > 0.0;
        }
    }
    out.require(signs, "sign preservation");

    // swapping alpha and beta flips kappa: q unchanged, p mirrored about p_bc
    const auto fwd = solve_decoupled_fd(make_parameters(1.0, 1.5, 0.05, 0.5, 1.0), g);
    const auto rev = solve_decoupled_fd(make_parameters(1.5, 1.0, 0.05, 0.5, 1.0), g);
    double anti = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        anti = std::max({anti, std::abs(fwd.q[i] - rev.q[i]),
                         std::abs(fwd.p[i] + rev.p[i] - 1.5)});
    }
    out.note("kappa antisymmetry " + fmt(anti) + ";");
    out.require(anti <= 1e-12, "kappa antisymmetry");

    // change of unknowns round trip
    const auto back = from_phases(s.pt, s.pc);
    const auto again = to_phases(back.q, back.p);
    const double trip = std::max(max_abs_difference(again.pt, s.pt), max_abs_difference(again.pc, s.pc));
    out.note("round trip " + fmt(trip) + ";");
    out.require(trip <= 4e-16 * std::max(max_abs(s.pt), max_abs(s.pc)), "round trip");

    // tiny eps: closed forms, approximant and resolved FD all finite
    const auto tiny = reference_parameters(1e-4);
    bool finite = true;
    for (int i = 0; i <= 100000; ++i) {
        const double r = i / 100000.0;
        finite = finite && std::isfinite(exact_q(tiny, r)) && std::isfinite(exact_q_dr(tiny, r)) &&
                 std::isfinite(exact_q_d2r(tiny, r)) && std::isfinite(exact_p(tiny, r));
    }
    const auto tiny_grid = Grid::resolving(derive_constants(tiny).gamma, 1e-4);
    const auto tiny_fd = solve_coupled_fd(tiny, tiny_grid);
    const auto tiny_ap = approximant_phases(build_expansion(tiny, 2), tiny, tiny_grid);
    for (std::size_t i = 0; i < tiny_grid.size(); ++i) {
        finite = finite && std::isfinite(tiny_fd.pt[i]) && std::isfinite(tiny_fd.pc[i]) &&
                 std::isfinite(tiny_ap.pt[i]) && std::isfinite(tiny_ap.pc[i]);
    }
    out.require(finite, "finite at eps=1e-4");
    out.note("eps=1e-4 finite on " + std::to_string(tiny_grid.intervals()) + " intervals");
    return out;
}

Outcome benchmark() {
    Outcome out;
    runner::RunConfig cfg;
    cfg.experiment = "bench";
    // the convergence sweep with eps = 0.02 added
    cfg.eps_list = geometric_sweep(0.1, 0.01, 10);
    cfg.eps_list.push_back(0.02);
    std::sort(cfg.eps_list.rbegin(), cfg.eps_list.rend());
    cfg.output_dir = scratch("bench");
    const auto run = runner::run_bench(cfg);
    bool monotone = true;
    bool has_002 = false;
    for (std::size_t i = 0; i < run.rows.size(); ++i) {
        const auto& r = run.rows[i];
        out.note("eps " + fmt(r.eps) + " N " + std::to_string(r.n) + " x" + fmt(r.speedup) +
                 " gap " + fmt(r.l2_gap) + ";");
        if (i > 0) {
            // a drop counts only if it exceeds the measured timing spread of both rows;
            // while the layer spans the whole ball both costs are proportional to N
            const auto& prev = run.rows[i - 1];
            const double allowed = prev.speedup * (r.speedup_noise + prev.speedup_noise);
            if (r.speedup < prev.speedup - allowed) {
                monotone = false;
                out.note("(drop beyond noise " + fmt(allowed) + ")");
            }
        }
        if (r.eps == 0.02) {
            has_002 = true;
            out.require(r.speedup > 1.0, "speedup at eps=0.02");
        }
    }
    out.require(has_002, "eps=0.02 measured");
    out.require(monotone, "speedup non-decreasing as eps decreases");
    out.require(run.rows.back().speedup > run.rows.front().speedup, "speedup grows over the sweep");
    out.require(run.gap_fit.has_value(), "gap slope defined");
    if (run.gap_fit) {
        out.note("gap slope " + fmt(run.gap_fit->slope));
        out.require(run.gap_fit->slope >= 2.0, "gap slope matches order-1 L2 rate");
    }
    return out;
}

}  // namespace

int main() {
    // under-resolution warnings are checked elsewhere; keep this output to the verdicts
    ScopedWarningHandler quiet([](std::string_view) {});
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 fd second order", fd_order},
        {"2 boundary layer profiles", profile_layer},
        {"3 approximant convergence rates", convergence_rates},
        {"4 interior decay", interior_decay},
        {"5 exact profile identities", profile_identities},
        {"6 coupled and decoupled agree", coupled_equivalence},
        {"7 property suite", properties},
        {"8 approximant vs full solve", benchmark},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("threw: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s  %-34s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures;
}
