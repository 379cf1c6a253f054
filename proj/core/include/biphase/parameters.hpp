#pragma once

namespace biphase {

/**
 * Physical and asymptotic constants of the biphase problem
 *
 *   -div(E grad p_t) + alpha^2/eps^2 (p_t - p_c) = 0
 *   -div(E grad p_c) - beta^2/eps^2  (p_t - p_c) = 0
 *   p_t = pi_t, p_c = pi_c on the boundary,
 *
 * with a scalar constant permeability E = e33. Instances can only be built
 * through make_parameters(), so every Parameters value is valid.
 */
class Parameters {
public:
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double eps() const noexcept { return eps_; }
    double pi_t() const noexcept { return pi_t_; }
    double pi_c() const noexcept { return pi_c_; }
    double e33() const noexcept { return e33_; }

    /// Same constants with a different asymptotic parameter.
    Parameters with_eps(double eps) const;
    /// Same constants with different Dirichlet data.
    Parameters with_boundary(double pi_t, double pi_c) const;

    friend bool operator==(const Parameters&, const Parameters&) = default;

private:
    friend Parameters make_parameters(double, double, double, double, double, double);

    Parameters(double alpha, double beta, double eps, double pi_t, double pi_c, double e33)
        : alpha_(alpha), beta_(beta), eps_(eps), pi_t_(pi_t), pi_c_(pi_c), e33_(e33) {}

    double alpha_;
    double beta_;
    double eps_;
    double pi_t_;
    double pi_c_;
    double e33_;
};

/// Validates and builds Parameters. Throws ValidationError when alpha, beta,
/// eps or e33 is not strictly positive (or any value is not finite). eps > 1
/// is accepted with a warning.
Parameters make_parameters(double alpha, double beta, double eps, double pi_t, double pi_c,
                           double e33 = 1.0);

/// Reference setup: alpha=1, beta=1.5, pi_t=0.5, pi_c=1, e33=1.
Parameters reference_parameters(double eps = 0.1);

struct DerivedConstants {
    double gamma;  ///< layer decay rate, gamma^2 * e33 = alpha^2 + beta^2
    double kappa;  ///< coupling ratio (alpha^2 - beta^2) / (alpha^2 + beta^2)
    double q_bc;   ///< (pi_t - pi_c) / 2
    double p_bc;   ///< (pi_t + pi_c) / 2
};

DerivedConstants derive_constants(const Parameters& params);

}  // namespace biphase
