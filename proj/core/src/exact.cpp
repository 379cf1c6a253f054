#include "biphase/exact.hpp"

#include <cmath>
#include <sstream>

#include "biphase/errors.hpp"

namespace biphase {

namespace {

void require_unit_interval(double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        std::ostringstream os;
        os << "radius " << r << " is outside [0, 1]";
        throw ValidationError(os.str());
    }
}

// 1 / (1 - exp(-2a)), finite for every a > 0.
double inv_one_minus_exp2(double a) { return -1.0 / std::expm1(-2.0 * a); }

// x - small-argument switch for the derivative kernels below. Below it the
// exponential forms cancel catastrophically, above it the series is slow.
constexpr double series_switch = 1.0;

// sum_{m>=1} coef(m) x^(2m+1-k) / (2m+1)!, with the leading x^(3-k)/6 passed
// in as `first` so tiny x never forms x^3.
template <typename Coef>
double odd_series(double x, double first, Coef coef) {
    const double x2 = x * x;
    double power = first;
    double sum = coef(1) * power;
    for (int m = 2; m < 30; ++m) {
        power *= x2 / static_cast<double>((2 * m) * (2 * m + 1));
        const double term = coef(m) * power;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

// With a = gamma/eps and x = a r:
//   q    = q_bc * a   / sinh(a) * sinh(x) / x
//   q'   = q_bc * a^2 / sinh(a) * (x cosh x - sinh x) / x^2
//   q''  = q_bc * a^3 / sinh(a) * (x^2 sinh x - 2x cosh x + 2 sinh x) / x^3
// The helpers below return the bracketed quotients divided by sinh(a).

double d1_kernel(double x, double a) {
    if (x < series_switch) {
        // x cosh x - sinh x = sum 2m x^(2m+1) / (2m+1)!
        const double s = odd_series(x, x / 6.0, [](int m) { return 2.0 * m; });
        return s * 2.0 * std::exp(-a) * inv_one_minus_exp2(a);
    }
    const double e2x = std::exp(-2.0 * x);
    return (x * (1.0 + e2x) + std::expm1(-2.0 * x)) / (x * x) * std::exp(x - a) *
           inv_one_minus_exp2(a);
}

double d2_kernel(double x, double a) {
    if (x < series_switch) {
        // x^2 sinh x - 2x cosh x + 2 sinh x = sum (4m^2 - 2m) x^(2m+1) / (2m+1)!
        const double s = odd_series(x, 1.0 / 6.0, [](int m) { return 4.0 * m * m - 2.0 * m; });
        return s * 2.0 * std::exp(-a) * inv_one_minus_exp2(a);
    }
    const double e2x = std::exp(-2.0 * x);
    const double one_minus = -std::expm1(-2.0 * x);
    return (x * x * one_minus - 2.0 * x * (1.0 + e2x) + 2.0 * one_minus) / (x * x * x) *
           std::exp(x - a) * inv_one_minus_exp2(a);
}

}  // namespace

double exact_q(const Parameters& params, double r) {
    require_unit_interval(r);
    const auto c = derive_constants(params);
    if (c.q_bc == 0.0) {
        return 0.0;
    }
    const double a = c.gamma / params.eps();
    // sinh(a r) / (r sinh a) = e^{-a(1-r)} (1 - e^{-2ar}) / (r (1 - e^{-2a})).
    // At r = 0 the limit of (1 - e^{-2ar}) / r is 2a.
    const double numerator = r == 0.0 ? 2.0 * a : -std::expm1(-2.0 * a * r) / r;
    return c.q_bc * std::exp(-a * (1.0 - r)) * numerator * inv_one_minus_exp2(a);
}

double exact_q_dr(const Parameters& params, double r) {
    require_unit_interval(r);
    const auto c = derive_constants(params);
    if (c.q_bc == 0.0 || r == 0.0) {
        return 0.0;
    }
    const double a = c.gamma / params.eps();
    const double x = a * r;
    return c.q_bc * a * a * d1_kernel(x, a);
}

double exact_q_d2r(const Parameters& params, double r) {
    require_unit_interval(r);
    const auto c = derive_constants(params);
    if (c.q_bc == 0.0) {
        return 0.0;
    }
    const double a = c.gamma / params.eps();
    if (r == 0.0) {
        // (sinh x / x)'' -> 1/3 at x = 0
        return c.q_bc * a * a * a / 3.0 * 2.0 * std::exp(-a) * inv_one_minus_exp2(a);
    }
    const double x = a * r;
    return c.q_bc * a * a * a * d2_kernel(x, a);
}

double exact_p(const Parameters& params, double r) {
    const auto c = derive_constants(params);
    return monophase_value(params) + c.kappa * exact_q(params, r);
}

double exact_p_dr(const Parameters& params, double r) {
    return derive_constants(params).kappa * exact_q_dr(params, r);
}

double monophase_value(const Parameters& params) {
    const auto c = derive_constants(params);
    return c.p_bc - c.kappa * c.q_bc;
}

}  // namespace biphase
