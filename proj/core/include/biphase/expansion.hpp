#pragma once

#include <optional>
#include <vector>

#include "biphase/grid.hpp"
#include "biphase/parameters.hpp"
#include "biphase/phases.hpp"
#include "biphase/polyexp.hpp"

namespace biphase {

/**
 * Boundary-layer expansion on the unit ball, in the stretched variable
 * rho = (1 - r) / eps:
 *
 *   q ~ sum_l eps^l q^l(rho),        p ~ P0 + sum_l eps^l p_l(rho).
 *
 * In rho the radial operator reads
 *   eps^-2 [ d2/drho2 - 2 eps / (1 - eps rho) d/drho - gamma^2 ],
 * and expanding 2 / (1 - eps rho) = 2 sum_m (eps rho)^m gives the profile
 * hierarchy
 *
 *   -q^k'' + gamma^2 q^k = - sum_{m=0}^{k-1} curvature[m] rho^m d/drho q^{k-1-m},
 *   q^0(0) = q_bc,  q^k(0) = 0 for k >= 1,
 *
 * with curvature[m] = 2 for the sphere. The mean-pressure profiles follow
 * from p_k = kappa q^k.
 */
template <typename T>
struct BasicExpansionSet {
    int order = 0;
    T gamma;
    T kappa;
    T monophase;
    std::vector<BasicPolyExp<T>> q_profiles;
    std::vector<BasicPolyExp<T>> p_profiles;
    std::vector<T> curvature;
};

using ExpansionSet = BasicExpansionSet<double>;

/// Right-hand side of the order-k profile equation, built from the already
/// known profiles q^0..q^{k-1}.
template <typename T>
BasicPolyExp<T> profile_rhs(const std::vector<BasicPolyExp<T>>& q_profiles,
                            const std::vector<T>& curvature, int k) {
    BasicPolyExp<T> rhs(q_profiles.front().gamma());
    for (int m = 0; m < k; ++m) {
        const auto& lower = q_profiles[static_cast<std::size_t>(k - 1 - m)];
        rhs = rhs - lower.derivative().shifted(static_cast<std::size_t>(m))
                        .scaled(curvature[static_cast<std::size_t>(m)]);
    }
    return rhs;
}

/// Builds profiles up to `order` from the derived constants. Throws
/// ValidationError for a negative order.
template <typename T>
BasicExpansionSet<T> build_expansion(const T& gamma, const T& kappa, const T& q_bc,
                                     const T& p_bc, int order) {
    if (order < 0) {
        throw ValidationError("expansion order must be non-negative");
    }
    BasicExpansionSet<T> set{.order = order,
                             .gamma = gamma,
                             .kappa = kappa,
                             .monophase = p_bc - kappa * q_bc,
                             .q_profiles = {},
                             .p_profiles = {},
                             .curvature = std::vector<T>(static_cast<std::size_t>(order), T(2))};
    set.q_profiles.emplace_back(gamma, std::vector<T>{q_bc});
    for (int k = 1; k <= order; ++k) {
        set.q_profiles.push_back(solve_profile_ode(profile_rhs(set.q_profiles, set.curvature, k),
                                                   gamma));
    }
    for (const auto& q : set.q_profiles) {
        set.p_profiles.push_back(q.scaled(kappa));
    }
    return set;
}

ExpansionSet build_expansion(const Parameters& params, int order);

enum class Quantity { q, p };

/// C^2 quintic transition: 0 for r <= 1 - 2d, 1 for r >= 1 - d.
struct Cutoff {
    double d = 0.25;

    /// Throws ValidationError unless 0 < d < 1/2.
    void validate() const;
    double operator()(double r) const;
    double derivative(double r) const;
};

/// sum_{l<=order} eps^l q^l as a single profile (polynomial in rho).
PolyExp layer_profile(const ExpansionSet& set, double eps);

/// Order-k approximant of q (layer sum) or p (P0 + kappa * layer sum) at r,
/// optionally localized by a cutoff. Throws ValidationError for r outside
/// [0, 1] or when the set was built for a different gamma.
double approximant(const ExpansionSet& set, const Parameters& params, double r, Quantity which,
                   std::optional<Cutoff> cutoff = std::nullopt);

/// d/dr of approximant().
double approximant_dr(const ExpansionSet& set, const Parameters& params, double r,
                      Quantity which, std::optional<Cutoff> cutoff = std::nullopt);

/**
 * Approximant sampled on a grid. The layer term is evaluated from r = 1
 * inwards and dropped once every monomial is past its maximum and the sum of
 * their magnitudes falls below `tail_tolerance` times |q_bc|; with the
 * default 0 every node is evaluated.
 */
RadialField approximant_field(const ExpansionSet& set, const Parameters& params,
                              const Grid& grid, Quantity which,
                              std::optional<Cutoff> cutoff = std::nullopt,
                              double tail_tolerance = 0.0);

/// p_t = p + q and p_c = p - q from the approximants, sharing one layer
/// evaluation per node. Same tail rule as approximant_field().
PhasePair approximant_phases(const ExpansionSet& set, const Parameters& params,
                             const Grid& grid, std::optional<Cutoff> cutoff = std::nullopt,
                             double tail_tolerance = 0.0);

}  // namespace biphase
