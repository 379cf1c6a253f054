#pragma once

#include <string>

#include "biphase/grid.hpp"
#include "biphase/parameters.hpp"
#include "biphase/phases.hpp"
#include "biphase/tridiagonal.hpp"

namespace biphase {

// Second-order finite differences for the radial problems
//
//   q'' + (2/r) q' - gamma^2/eps^2 q          = 0,  q(1) = q_bc, q'(0) = 0
//   p'' + (2/r) p' - (a^2-b^2)/(e33 eps^2) q  = 0,  p(1) = p_bc, p'(0) = 0
//
// Interior rows are multiplied by r and use
//   r (f'' + (2/r) f') = (r f)'' ~ (r_{i+1} f_{i+1} - 2 r_i f_i + r_{i-1} f_{i-1}) / dr^2,
// which stays regular at the centre. Row 0 is the one-sided zero-flux
// condition (-3 f_0 + 4 f_1 - f_2) / (2 dr) = 0; its f_2 entry is stored as
// the system corner and eliminated against row 1.

/// True when dr <= eps / (10 gamma), i.e. at least ten nodes per e-folding
/// of the boundary layer.
bool resolves_layer(const Parameters& params, const Grid& grid);

/// Human-readable reason when resolves_layer() is false, empty otherwise.
std::string resolution_message(const Parameters& params, const Grid& grid);

TridiagonalSystem assemble_q_system(const Parameters& params, const Grid& grid);

/// Throws ValidationError when q_source is not on `grid`.
TridiagonalSystem assemble_p_system(const Parameters& params, const Grid& grid,
                                    const RadialField& q_source);

/// Emits a warning (not an error) when the layer is under-resolved.
RadialField solve_q_fd(const Parameters& params, const Grid& grid);

RadialField solve_p_fd(const Parameters& params, const Grid& grid, const RadialField& q_source);

/// Both decoupled solves; q first, then p with q as source.
DecoupledPair solve_decoupled_fd(const Parameters& params, const Grid& grid);

/// Interleaved (p_t, p_c) block system for the original biphase equations.
BlockTridiagonalSystem assemble_coupled_system(const Parameters& params, const Grid& grid);

/// Solves the biphase system directly with 2x2 block elimination.
PhasePair solve_coupled_fd(const Parameters& params, const Grid& grid);

}  // namespace biphase
