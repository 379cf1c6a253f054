#include "runner/experiments.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "biphase/exact.hpp"
#include "biphase/expansion.hpp"
#include "biphase/fd_solver.hpp"
#include "runner/csv.hpp"
#include "runner/svg_chart.hpp"

namespace biphase::runner {

namespace {

std::filesystem::path prepare_output(const RunConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec || !std::filesystem::is_directory(cfg.output_dir)) {
        throw std::runtime_error("cannot create output directory " + cfg.output_dir.string());
    }
    return cfg.output_dir;
}

double slope_or_nan(const std::optional<LineFit>& fit) {
    return fit ? fit->slope : std::numeric_limits<double>::quiet_NaN();
}

// Guide line c * eps^s through the first data point.
Series guide(const std::vector<double>& eps, double first, double s, const std::string& label) {
    Series g{label, {}, {}, true};
    for (double e : eps) {
        g.x.push_back(e);
        g.y.push_back(first * std::pow(e / eps.front(), s));
    }
    return g;
}

volatile double timing_sink = 0.0;

struct Timing {
    double best = 0.0;
    double spread = 0.0;  // (median - best) / best over the five samples
};

using Clock = std::chrono::steady_clock;

double time_per_call(const std::function<double()>& op, int reps) {
    const auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) {
        timing_sink = timing_sink + op();
    }
    return std::chrono::duration<double>(Clock::now() - t0).count() / reps;
}

// enough repetitions for a sample of at least 2 ms
int reps_for(double single_call) {
    return std::clamp(static_cast<int>(std::ceil(2e-3 / std::max(single_call, 1e-9))), 1, 10000);
}

Timing summarize(std::array<double, 5> t) {
    std::sort(t.begin(), t.end());
    return {t[0], (t[2] - t[0]) / t[0]};
}

struct BenchCase {
    BenchRow row;
    std::function<double()> full;
    std::function<double()> approx;
    int reps_full = 1;
    int reps_approx = 1;
    std::array<double, 5> t_full{};
    std::array<double, 5> t_approx{};
};

BenchCase prepare_case(const RunConfig& cfg, double eps) {
    const auto params = cfg.parameters(eps);
    const Grid grid = Grid::resolving(derive_constants(params).gamma, eps, bench_nodes_per_efold);
    const auto cutoff = cfg.cutoff_function();
    const int order = cfg.order;
    constexpr double tail = 1e-18;

    BenchCase c;
    c.row.eps = eps;
    c.row.n = grid.intervals();
    c.full = [params, grid] { return solve_coupled_fd(params, grid).pt.front(); };
    c.approx = [params, grid, cutoff, order] {
        return approximant_phases(build_expansion(params, order), params, grid, cutoff, tail)
            .pt.front();
    };

    const auto full = solve_coupled_fd(params, grid);
    const auto approx = approximant_phases(build_expansion(params, order), params, grid, cutoff, tail);
    const double gt = error_norms(full.pt, approx.pt, cfg.norm_weight).l2;
    const double gc = error_norms(full.pc, approx.pc, cfg.norm_weight).l2;
    c.row.l2_gap = std::sqrt(gt * gt + gc * gc);

    c.reps_full = reps_for(time_per_call(c.full, 1));
    c.reps_approx = reps_for(time_per_call(c.approx, 1));
    return c;
}

// Best of 5 per case. The 5 samples of a case are taken in 5 separate passes
// over the whole sweep, so a slow stretch of the machine costs any one case
// at most a sample or two.
std::vector<BenchRow> measure(const RunConfig& cfg, const std::vector<double>& eps_values) {
    std::vector<BenchCase> cases;
    for (double eps : eps_values) {
        cases.push_back(prepare_case(cfg, eps));
    }
    for (std::size_t k = 0; k < 5; ++k) {
        for (auto& c : cases) {
            c.t_full[k] = time_per_call(c.full, c.reps_full);
            c.t_approx[k] = time_per_call(c.approx, c.reps_approx);
        }
    }
    std::vector<BenchRow> rows;
    for (auto& c : cases) {
        const auto full = summarize(c.t_full);
        const auto approx = summarize(c.t_approx);
        c.row.t_full = full.best;
        c.row.t_approx = approx.best;
        c.row.speedup = full.best / approx.best;
        c.row.speedup_noise = full.spread + approx.spread;
        rows.push_back(c.row);
    }
    return rows;
}

}  // namespace

Files run_profiles(const RunConfig& cfg) {
    const auto eps_values = cfg.eps_values();
    const Grid grid(cfg.grid_n);
    for (double eps : eps_values) {
        const auto params = cfg.parameters(eps);
        if (!resolves_layer(params, grid)) {
            throw ValidationError(resolution_message(params, grid));
        }
    }
    const auto dir = prepare_output(cfg);
    Files files;
    LineChart q_chart{"difference pressure q", "r", "q", false, false, {}};
    LineChart p_chart{"mean pressure p", "r", "p", false, false, {}};
    const auto r = grid.nodes();

    for (double eps : eps_values) {
        const auto params = cfg.parameters(eps);
        const auto fd = solve_decoupled_fd(params, grid);
        const auto set = build_expansion(params, cfg.order);
        const auto q_approx = approximant_field(set, params, grid, Quantity::q, cfg.cutoff_function());
        const auto p_approx = approximant_field(set, params, grid, Quantity::p, cfg.cutoff_function());

        const auto path = dir / ("profiles_" + eps_tag(eps) + ".csv");
        CsvWriter csv(path, {"r", "q_fd", "q_exact", "q_approx", "p_fd", "p_exact", "p_approx"});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double row[] = {r[i],       fd.q[i],     exact_q(params, r[i]), q_approx[i],
                                  fd.p[i], exact_p(params, r[i]), p_approx[i]};
            csv.row(row);
        }
        files.push_back(path);

        const std::vector<double> qv(fd.q.values().begin(), fd.q.values().end());
        const std::vector<double> pv(fd.p.values().begin(), fd.p.values().end());
        q_chart.series.push_back(decimated("eps=" + eps_tag(eps), r, qv));
        p_chart.series.push_back(decimated("eps=" + eps_tag(eps), r, pv));
    }
    q_chart.save(dir / "profiles_q.svg");
    p_chart.save(dir / "profiles_p.svg");
    files.push_back(dir / "profiles_q.svg");
    files.push_back(dir / "profiles_p.svg");
    return files;
}

ConvergenceRun run_convergence(const RunConfig& cfg) {
    const auto eps_values = cfg.eps_values();
    ConvergenceOptions options;
    options.weight = cfg.norm_weight;
    options.cutoff = cfg.cutoff_function();
    options.grid.fixed_n = cfg.grid_n;
    ConvergenceRun run{convergence_study(cfg.parameters(eps_values.front()), eps_values,
                                         cfg.order, options),
                       {}};
    const auto& rep = run.report;
    const auto dir = prepare_output(cfg);

    const auto path = dir / "converge_summary.csv";
    {
        CsvWriter csv(path, {"eps", "l2_q", "h1_q", "l2_p", "h1_p"});
        for (std::size_t i = 0; i < rep.eps_values.size(); ++i) {
            const double row[] = {rep.eps_values[i], rep.q_norms[i].l2, rep.q_norms[i].h1,
                                  rep.p_norms[i].l2, rep.p_norms[i].h1};
            csv.row(row);
        }
        const double slopes[] = {slope_or_nan(rep.l2_q), slope_or_nan(rep.h1_q),
                                 slope_or_nan(rep.l2_p), slope_or_nan(rep.h1_p)};
        csv.row("slope", slopes);
    }
    run.files.push_back(path);

    const double k = rep.order;
    for (const auto which : {Quantity::q, Quantity::p}) {
        const auto& norms = which == Quantity::q ? rep.q_norms : rep.p_norms;
        const std::string name = which == Quantity::q ? "q" : "p";
        std::vector<double> l2;
        std::vector<double> h1;
        for (const auto& n : norms) {
            l2.push_back(n.l2);
            h1.push_back(n.h1);
        }
        LineChart chart{"order-" + std::to_string(rep.order) + " approximation error of " + name,
                        "eps", "error", true, true, {}};
        chart.series.push_back({"L2", rep.eps_values, l2, false});
        chart.series.push_back({"H1", rep.eps_values, h1, false});
        chart.series.push_back(guide(rep.eps_values, l2.front(), k + 1.0, "slope k+1"));
        chart.series.push_back(guide(rep.eps_values, h1.front(), k + 0.5, "slope k+1/2"));
        const auto svg = dir / ("converge_" + name + ".svg");
        chart.save(svg);
        run.files.push_back(svg);
    }
    return run;
}

DecayRun run_decay(const RunConfig& cfg) {
    const auto eps_values = cfg.eps_values();
    GridPolicy policy;
    policy.fixed_n = cfg.grid_n;
    DecayRun run{decay_study(cfg.parameters(eps_values.front()), eps_values, cfg.decay_d, policy,
                             cfg.norm_weight),
                 {}};
    const auto& rep = run.report;
    const auto dir = prepare_output(cfg);

    const auto path = dir / "decay_summary.csv";
    std::vector<double> inv_eps;
    {
        CsvWriter csv(path, {"eps", "inv_eps", "l2_inner", "h1_inner"});
        for (std::size_t i = 0; i < rep.eps_values.size(); ++i) {
            inv_eps.push_back(1.0 / rep.eps_values[i]);
            const double row[] = {rep.eps_values[i], inv_eps.back(), rep.l2[i], rep.h1[i]};
            csv.row(row);
        }
        const double slopes[] = {rep.target_slope, slope_or_nan(rep.l2_fit),
                                 slope_or_nan(rep.h1_fit)};
        csv.row("slope", slopes);
    }
    run.files.push_back(path);

    LineChart chart{"norm of q on [0, 1-d], d=" + eps_tag(rep.margin), "1/eps", "norm", false,
                    true, {}};
    chart.series.push_back({"L2", inv_eps, rep.l2, false});
    chart.series.push_back({"H1", inv_eps, rep.h1, false});
    if (!rep.exact_decay && rep.l2.front() > 0.0) {
        Series g{"exp(-gamma d / eps)", {}, {}, true};
        for (double x : inv_eps) {
            g.x.push_back(x);
            g.y.push_back(rep.l2.front() * std::exp(rep.target_slope * (x - inv_eps.front())));
        }
        chart.series.push_back(std::move(g));
    }
    const auto svg = dir / "decay.svg";
    chart.save(svg);
    run.files.push_back(svg);
    return run;
}

BenchRow bench_case(const RunConfig& cfg, double eps) { return measure(cfg, {eps}).front(); }

BenchRun run_bench(const RunConfig& cfg) {
    const auto eps_values = cfg.eps_values();
    BenchRun run;
    run.rows = measure(cfg, eps_values);
    std::vector<double> eps;
    std::vector<double> gap;
    std::vector<double> speedup;
    for (const auto& r : run.rows) {
        eps.push_back(r.eps);
        gap.push_back(r.l2_gap);
        speedup.push_back(r.speedup);
    }
    if (eps.size() >= 2) {
        run.gap_fit = fit_loglog(eps, gap);
    }

    const auto dir = prepare_output(cfg);
    const auto path = dir / "bench_summary.csv";
    {
        CsvWriter csv(path, {"eps", "n", "t_full", "t_approx", "speedup", "l2_gap_between_them"});
        for (const auto& r : run.rows) {
            const double row[] = {r.eps, static_cast<double>(r.n), r.t_full, r.t_approx,
                                  r.speedup, r.l2_gap};
            csv.row(row);
        }
    }
    run.files.push_back(path);

    LineChart chart{"coupled solve vs approximant", "eps", "speedup", true, true, {}};
    chart.series.push_back({"t_full / t_approx", eps, speedup, false});
    const auto svg = dir / "bench.svg";
    chart.save(svg);
    run.files.push_back(svg);
    return run;
}

Files run_experiment(const RunConfig& cfg) {
    if (cfg.experiment == "profiles") {
        return run_profiles(cfg);
    }
    if (cfg.experiment == "converge") {
        return run_convergence(cfg).files;
    }
    if (cfg.experiment == "decay") {
        return run_decay(cfg).files;
    }
    if (cfg.experiment == "bench") {
        return run_bench(cfg).files;
    }
    throw ValidationError("unknown experiment '" + cfg.experiment + "'");
}

}  // namespace biphase::runner
