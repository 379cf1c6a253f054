#include "biphase/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "biphase/exact.hpp"
#include "biphase/fd_solver.hpp"

namespace biphase {

namespace {

std::size_t last_node_within(const Grid& grid, double r_max) {
    if (!(r_max > 0.0 && r_max <= 1.0)) {
        std::ostringstream os;
        os << "norm domain [0, " << r_max << "] must have r_max in (0, 1]";
        throw ValidationError(os.str());
    }
    const auto n = static_cast<double>(grid.intervals());
    auto m = static_cast<std::size_t>(std::floor(r_max * n + 1e-9));
    return std::min(m, grid.intervals());
}

// Trapezoid norms from pointwise value and derivative differences.
ErrorNorms integrate(const Grid& grid, std::span<const double> diff,
                     std::span<const double> ddiff, NormWeight weight, double r_max) {
    const std::size_t m = last_node_within(grid, r_max);
    const double h = grid.dr();
    double l2 = 0.0;
    double semi = 0.0;
    double linf = 0.0;
    for (std::size_t i = 0; i <= m; ++i) {
        const double r = grid.node(i);
        double w = weight == NormWeight::r2 ? r * r : 1.0;
        if (i == 0 || i == m) {
            w *= 0.5;
        }
        l2 += w * diff[i] * diff[i];
        semi += w * ddiff[i] * ddiff[i];
        linf = std::max(linf, std::abs(diff[i]));
    }
    l2 *= h;
    semi *= h;
    return ErrorNorms{std::sqrt(l2), std::sqrt(l2 + semi), linf, weight};
}

void require_sweep(std::span<const double> eps, std::size_t min_points, const char* context) {
    if (eps.size() < min_points) {
        std::ostringstream os;
        os << context << ": need at least " << min_points << " eps values, got " << eps.size();
        throw ValidationError(os.str());
    }
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!(eps[i] > 0.0) || (i > 0 && !(eps[i] < eps[i - 1]))) {
            throw ValidationError(std::string(context) +
                                  ": eps values must be positive and strictly decreasing");
        }
    }
}

}  // namespace

std::vector<double> sampled_derivative(const RadialField& f) {
    const std::size_t n = f.size();
    const double h = f.grid().dr();
    std::vector<double> d(n);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    }
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return d;
}

ErrorNorms error_norms(const RadialField& a, const RadialField& b, NormWeight weight,
                       double r_max) {
    require_same_grid(a, b, "error_norms");
    const auto da = sampled_derivative(a);
    const auto db = sampled_derivative(b);
    std::vector<double> diff(a.size());
    std::vector<double> ddiff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff[i] = a[i] - b[i];
        ddiff[i] = da[i] - db[i];
    }
    return integrate(a.grid(), diff, ddiff, weight, r_max);
}

ErrorNorms error_norms(const RadialField& a, const ClosedForm& b, NormWeight weight,
                       double r_max) {
    const auto da = sampled_derivative(a);
    const Grid& grid = a.grid();
    std::vector<double> diff(a.size());
    std::vector<double> ddiff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double r = grid.node(i);
        diff[i] = a[i] - b.value(r);
        ddiff[i] = da[i] - b.derivative(r);
    }
    return integrate(grid, diff, ddiff, weight, r_max);
}

ErrorNorms error_norms(const ClosedForm& a, const ClosedForm& b, const Grid& grid,
                       NormWeight weight, double r_max) {
    const std::size_t m = last_node_within(grid, r_max);
    std::vector<double> diff(grid.size(), 0.0);
    std::vector<double> ddiff(grid.size(), 0.0);
    for (std::size_t i = 0; i <= m; ++i) {
        const double r = grid.node(i);
        diff[i] = a.value(r) - b.value(r);
        ddiff[i] = a.derivative(r) - b.derivative(r);
    }
    return integrate(grid, diff, ddiff, weight, r_max);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ValidationError("fit_line needs at least two (x, y) pairs of equal length");
    }
    const auto n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw ValidationError("fit_line: abscissae are all equal");
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (fit.slope * x[i] + fit.intercept);
        ss += e * e;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

std::optional<LineFit> fit_loglog(std::span<const double> eps, std::span<const double> norms) {
    if (eps.size() != norms.size()) {
        throw ValidationError("fit_loglog: size mismatch");
    }
    std::vector<double> lx(eps.size());
    std::vector<double> ly(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!(norms[i] > 0.0)) {
            return std::nullopt;
        }
        lx[i] = std::log(eps[i]);
        ly[i] = std::log(norms[i]);
    }
    return fit_line(lx, ly);
}

std::vector<double> geometric_sweep(double first, double last, std::size_t count) {
    if (!(first > 0.0) || !(last > 0.0) || count < 2) {
        throw ValidationError("geometric_sweep needs positive end points and count >= 2");
    }
    std::vector<double> v(count);
    const double step = std::log(last / first) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        v[i] = first * std::exp(step * static_cast<double>(i));
    }
    v.back() = last;
    return v;
}

Grid GridPolicy::grid_for(const Parameters& params, double eps_min) const {
    const double gamma = derive_constants(params).gamma;
    const Parameters finest = params.with_eps(eps_min);
    if (fixed_n) {
        Grid grid(*fixed_n);
        if (!resolves_layer(finest, grid)) {
            throw ValidationError(resolution_message(finest, grid));
        }
        return grid;
    }
    if (nodes_per_efold < 10.0) {
        std::ostringstream os;
        os << "grid policy with " << nodes_per_efold
           << " nodes per e-folding cannot resolve the boundary layer (need >= 10)";
        throw ValidationError(os.str());
    }
    return Grid::resolving(gamma, eps_min, nodes_per_efold, min_n);
}

ConvergenceReport convergence_study(const Parameters& base, std::span<const double> eps_values,
                                    int order, const ConvergenceOptions& options) {
    require_sweep(eps_values, min_fit_points, "convergence_study");
    const std::size_t fit_end = options.fit_end.value_or(eps_values.size());
    if (fit_end > eps_values.size() || options.fit_begin >= fit_end ||
        fit_end - options.fit_begin < min_fit_points) {
        std::ostringstream os;
        os << "convergence_study: fit window [" << options.fit_begin << ", " << fit_end
           << ") must hold at least " << min_fit_points << " of the " << eps_values.size()
           << " eps values";
        throw ValidationError(os.str());
    }
    if (options.cutoff) {
        options.cutoff->validate();
    }
    const Grid grid = options.grid.grid_for(base, eps_values.back());

    ConvergenceReport report;
    report.order = order;
    report.grid_intervals = grid.intervals();
    report.eps_values.assign(eps_values.begin(), eps_values.end());
    report.fit_begin = options.fit_begin;
    report.fit_end = fit_end;

    for (const double eps : eps_values) {
        const Parameters params = base.with_eps(eps);
        const ExpansionSet set = build_expansion(params, order);
        const auto approx = [&](Quantity which) {
            return ClosedForm{
                [&, which](double r) { return approximant(set, params, r, which, options.cutoff); },
                [&, which](double r) {
                    return approximant_dr(set, params, r, which, options.cutoff);
                }};
        };
        if (options.reference == Reference::closed_form) {
            const ClosedForm q{[&](double r) { return exact_q(params, r); },
                               [&](double r) { return exact_q_dr(params, r); }};
            const ClosedForm p{[&](double r) { return exact_p(params, r); },
                               [&](double r) { return exact_p_dr(params, r); }};
            report.q_norms.push_back(error_norms(q, approx(Quantity::q), grid, options.weight));
            report.p_norms.push_back(error_norms(p, approx(Quantity::p), grid, options.weight));
        } else {
            const auto fd = solve_decoupled_fd(params, grid);
            report.q_norms.push_back(error_norms(fd.q, approx(Quantity::q), options.weight));
            report.p_norms.push_back(error_norms(fd.p, approx(Quantity::p), options.weight));
        }
    }

    const auto window = std::span(report.eps_values).subspan(options.fit_begin,
                                                             fit_end - options.fit_begin);
    const auto fit = [&](const std::vector<ErrorNorms>& norms, double ErrorNorms::*member) {
        std::vector<double> v;
        for (std::size_t i = options.fit_begin; i < fit_end; ++i) {
            v.push_back(norms[i].*member);
        }
        return fit_loglog(window, v);
    };
    report.l2_q = fit(report.q_norms, &ErrorNorms::l2);
    report.h1_q = fit(report.q_norms, &ErrorNorms::h1);
    report.l2_p = fit(report.p_norms, &ErrorNorms::l2);
    report.h1_p = fit(report.p_norms, &ErrorNorms::h1);
    return report;
}

DecayReport decay_study(const Parameters& base, std::span<const double> eps_values, double d,
                        const GridPolicy& policy, NormWeight weight) {
    if (!(d > 0.0 && d < 1.0)) {
        std::ostringstream os;
        os << "decay_study: inner margin d=" << d << " must lie in (0, 1)";
        throw ValidationError(os.str());
    }
    require_sweep(eps_values, min_fit_points, "decay_study");
    const Grid grid = policy.grid_for(base, eps_values.back());
    const auto c = derive_constants(base);

    DecayReport report;
    report.margin = d;
    report.target_slope = -c.gamma * d;
    report.grid_intervals = grid.intervals();
    report.eps_values.assign(eps_values.begin(), eps_values.end());
    report.exact_decay = c.q_bc == 0.0;

    const ClosedForm zero{[](double) { return 0.0; }, [](double) { return 0.0; }};
    for (const double eps : eps_values) {
        const Parameters params = base.with_eps(eps);
        const ClosedForm q{[&](double r) { return exact_q(params, r); },
                           [&](double r) { return exact_q_dr(params, r); }};
        const auto norms = error_norms(q, zero, grid, weight, 1.0 - d);
        report.l2.push_back(norms.l2);
        report.h1.push_back(norms.h1);
    }
    if (report.exact_decay) {
        return report;
    }

    std::vector<double> inv_eps;
    std::vector<double> log_l2;
    std::vector<double> log_h1;
    for (std::size_t i = 0; i < eps_values.size(); ++i) {
        if (!(report.l2[i] > 0.0) || !(report.h1[i] > 0.0)) {
            throw ValidationError("decay_study: inner norm underflowed to zero; use larger eps");
        }
        inv_eps.push_back(1.0 / eps_values[i]);
        log_l2.push_back(std::log(report.l2[i]));
        log_h1.push_back(std::log(report.h1[i]));
    }
    report.l2_fit = fit_line(inv_eps, log_l2);
    report.h1_fit = fit_line(inv_eps, log_h1);
    return report;
}

AprioriReport apriori_check(const Parameters& base, std::span<const double> eps_values,
                            const Grid& grid, NormWeight weight) {
    require_sweep(eps_values, 1, "apriori_check");
    const double data = std::abs(base.pi_t()) + std::abs(base.pi_c());
    AprioriReport report;
    report.eps_values.assign(eps_values.begin(), eps_values.end());
    const RadialField zero = RadialField::constant(grid, 0.0);
    for (const double eps : eps_values) {
        const RadialField q = solve_q_fd(base.with_eps(eps), grid);
        const double l2 = 2.0 * error_norms(q, zero, weight).l2;
        if (!report.l2_difference.empty() && !(l2 < report.l2_difference.back())) {
            report.decreasing = report.decreasing && l2 == 0.0;
        }
        report.l2_difference.push_back(l2);
        report.ratio.push_back(data > 0.0 ? l2 / data : 0.0);
        report.max_ratio = std::max(report.max_ratio, report.ratio.back());
    }
    return report;
}

}  // namespace biphase
