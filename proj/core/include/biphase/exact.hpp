#pragma once

#include "biphase/parameters.hpp"

namespace biphase {

// Closed-form radial solutions on the unit ball for constant Dirichlet data.
//
//   q(r) = q_bc * sinh(gamma r / eps) / (r sinh(gamma / eps))
//   p(r) = P0 + kappa * q(r),   P0 = p_bc - kappa * q_bc
//
// The denominator is sinh(gamma/eps): it is the only choice for which
// q(1) = q_bc. All evaluations go through exp(-gamma (1 - r) / eps) factors,
// so nothing overflows even for gamma/eps ~ 1e4 and beyond.
//
// Every function throws ValidationError when r is outside [0, 1].

double exact_q(const Parameters& params, double r);
double exact_q_dr(const Parameters& params, double r);
double exact_q_d2r(const Parameters& params, double r);

double exact_p(const Parameters& params, double r);
double exact_p_dr(const Parameters& params, double r);

/// Boundary value of the monophase limit, p_bc - kappa * q_bc. On the ball
/// with constant data the harmonic limit is this constant everywhere.
double monophase_value(const Parameters& params);

}  // namespace biphase
