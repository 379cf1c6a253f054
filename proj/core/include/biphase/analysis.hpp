#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "biphase/expansion.hpp"
#include "biphase/grid.hpp"
#include "biphase/parameters.hpp"

namespace biphase {

/// Measure used by the norms: plain dr on [0, 1], or the spherical r^2 dr.
enum class NormWeight { none, r2 };

struct ErrorNorms {
    double l2 = 0.0;
    double h1 = 0.0;  ///< sqrt(l2^2 + |d/dr|^2), so h1 >= l2
    double linf = 0.0;
    NormWeight weight = NormWeight::none;
};

/// A function known in closed form together with its r-derivative.
struct ClosedForm {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
};

/// Second-order derivative of sampled data: central differences inside,
/// one-sided three-point stencils at both ends.
std::vector<double> sampled_derivative(const RadialField& f);

/**
 * Norms of a - b over [0, r_max] by the composite trapezoid rule on the grid
 * nodes r_i <= r_max. Sampled inputs are differentiated with
 * sampled_derivative(); closed forms use their analytic derivative.
 * Throws ValidationError on grid mismatch or r_max outside (0, 1].
 */
ErrorNorms error_norms(const RadialField& a, const RadialField& b,
                       NormWeight weight = NormWeight::none, double r_max = 1.0);
ErrorNorms error_norms(const RadialField& a, const ClosedForm& b,
                       NormWeight weight = NormWeight::none, double r_max = 1.0);
ErrorNorms error_norms(const ClosedForm& a, const ClosedForm& b, const Grid& grid,
                       NormWeight weight = NormWeight::none, double r_max = 1.0);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

/// Ordinary least squares y = slope x + intercept. Throws ValidationError for
/// fewer than two points or constant x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Fit of log(norm) against log(eps); nullopt when any norm is zero (the
/// slope is undefined, e.g. for pi_t == pi_c).
std::optional<LineFit> fit_loglog(std::span<const double> eps, std::span<const double> norms);

/// `count` values from `first` to `last`, equally spaced in log.
std::vector<double> geometric_sweep(double first, double last, std::size_t count);

/// How the study grid is chosen: enough nodes per layer e-folding at the
/// smallest eps, and never fewer than min_n intervals. A fixed_n that does
/// not resolve the layer is rejected.
struct GridPolicy {
    double nodes_per_efold = 40.0;
    std::size_t min_n = 2000;
    std::optional<std::size_t> fixed_n;

    Grid grid_for(const Parameters& params, double eps_min) const;
};

enum class Reference { closed_form, finite_difference };

struct ConvergenceOptions {
    Reference reference = Reference::closed_form;
    NormWeight weight = NormWeight::none;
    std::optional<Cutoff> cutoff;
    GridPolicy grid;
    std::size_t fit_begin = 0;              ///< first eps index used in the fit
    std::optional<std::size_t> fit_end;     ///< one past the last; default all
};

struct ConvergenceReport {
    int order = 0;
    std::size_t grid_intervals = 0;
    std::vector<double> eps_values;
    std::vector<ErrorNorms> q_norms;
    std::vector<ErrorNorms> p_norms;
    std::optional<LineFit> l2_q;
    std::optional<LineFit> h1_q;
    std::optional<LineFit> l2_p;
    std::optional<LineFit> h1_p;
    std::size_t fit_begin = 0;
    std::size_t fit_end = 0;
};

inline constexpr std::size_t min_fit_points = 4;

/**
 * Errors of the order-k approximants of q and p against the reference
 * solution for every eps in the sweep, and their log-log slopes.
 *
 * The sweep must be strictly decreasing with at least min_fit_points values
 * inside the fit window; the grid policy must resolve the layer at the
 * smallest eps. Violations throw ValidationError.
 */
ConvergenceReport convergence_study(const Parameters& base, std::span<const double> eps_values,
                                    int order, const ConvergenceOptions& options = {});

struct DecayReport {
    double margin = 0.0;            ///< d, the inner region is [0, 1 - d]
    double target_slope = 0.0;      ///< -gamma d
    std::size_t grid_intervals = 0;
    std::vector<double> eps_values;
    std::vector<double> l2;
    std::vector<double> h1;
    std::optional<LineFit> l2_fit;  ///< log ||q||_L2 against 1/eps
    std::optional<LineFit> h1_fit;
    bool exact_decay = false;       ///< q vanishes identically
};

/// Decay of q away from the boundary: norms of the closed-form q over
/// [0, 1 - d] and their slope in 1/eps. Throws ValidationError unless
/// 0 < d < 1 and the sweep has at least min_fit_points decreasing values.
DecayReport decay_study(const Parameters& base, std::span<const double> eps_values, double d,
                        const GridPolicy& policy = {}, NormWeight weight = NormWeight::none);

struct AprioriReport {
    std::vector<double> eps_values;
    std::vector<double> l2_difference;  ///< ||p_t - p_c||_L2 = ||2 q||_L2
    std::vector<double> ratio;          ///< l2_difference / (|pi_t| + |pi_c|)
    double max_ratio = 0.0;
    bool decreasing = true;
};

/// Sanity bound on the computed phase difference: solves q by finite
/// differences on `grid` for each eps and tracks ||2 q||_L2.
AprioriReport apriori_check(const Parameters& base, std::span<const double> eps_values,
                            const Grid& grid, NormWeight weight = NormWeight::none);

}  // namespace biphase
