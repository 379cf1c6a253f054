#include "biphase/parameters.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "biphase/diagnostics.hpp"
#include "biphase/errors.hpp"

namespace biphase {

namespace {

void require_positive(double value, const char* name) {
    if (!std::isfinite(value) || !(value > 0.0)) {
        std::ostringstream os;
        os << name << " must be a finite positive number, got " << value;
        throw ValidationError(os.str());
    }
}

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw ValidationError(std::string(name) + " must be finite");
    }
}

}  // namespace

Parameters make_parameters(double alpha, double beta, double eps, double pi_t, double pi_c,
                           double e33) {
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    require_positive(eps, "eps");
    require_positive(e33, "e33");
    require_finite(pi_t, "pi_t");
    require_finite(pi_c, "pi_c");
    if (eps > 1.0) {
        std::ostringstream os;
        os << "eps=" << eps << " is outside the asymptotic range (0, 1]";
        warn(os.str());
    }
    return Parameters(alpha, beta, eps, pi_t, pi_c, e33);
}

Parameters Parameters::with_eps(double eps) const {
    return make_parameters(alpha_, beta_, eps, pi_t_, pi_c_, e33_);
}

Parameters Parameters::with_boundary(double pi_t, double pi_c) const {
    return make_parameters(alpha_, beta_, eps_, pi_t, pi_c, e33_);
}

Parameters reference_parameters(double eps) {
    return make_parameters(1.0, 1.5, eps, 0.5, 1.0, 1.0);
}

DerivedConstants derive_constants(const Parameters& params) {
    const double a2 = params.alpha() * params.alpha();
    const double b2 = params.beta() * params.beta();
    return DerivedConstants{
        .gamma = std::sqrt((a2 + b2) / params.e33()),
        .kappa = (a2 - b2) / (a2 + b2),
        .q_bc = (params.pi_t() - params.pi_c()) / 2.0,
        .p_bc = (params.pi_t() + params.pi_c()) / 2.0,
    };
}

}  // namespace biphase
