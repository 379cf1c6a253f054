#include "biphase/fd_solver.hpp"

#include <sstream>
#include <string>

#include "biphase/diagnostics.hpp"
#include "biphase/errors.hpp"

namespace biphase {

namespace {

constexpr double nodes_per_efold = 10.0;

// Zero-flux row 0 and Dirichlet row n, shared by the scalar systems.
void set_boundary_rows(TridiagonalSystem& sys, double dirichlet) {
    const std::size_t n = sys.size() - 1;
    sys.excess[0] = 0.0;
    sys.excess[n] = -1.0;
    sys.diag[0] = -3.0;
    sys.super[0] = 4.0;
    sys.corner = -1.0;
    sys.rhs[0] = 0.0;
    sys.sub[n] = 0.0;
    sys.diag[n] = 1.0;
    sys.rhs[n] = dirichlet;
}

}  // namespace

bool resolves_layer(const Parameters& params, const Grid& grid) {
    const double gamma = derive_constants(params).gamma;
    return grid.dr() <= params.eps() / (nodes_per_efold * gamma);
}

std::string resolution_message(const Parameters& params, const Grid& grid) {
    if (resolves_layer(params, grid)) {
        return {};
    }
    const double gamma = derive_constants(params).gamma;
    std::ostringstream os;
    os << "boundary layer unresolved at eps=" << params.eps() << ": dr=" << grid.dr()
       << " exceeds eps/(10 gamma)=" << params.eps() / (nodes_per_efold * gamma)
       << "; use at least " << Grid::resolving(gamma, params.eps()).intervals()
       << " intervals";
    return os.str();
}

TridiagonalSystem assemble_q_system(const Parameters& params, const Grid& grid) {
    const auto c = derive_constants(params);
    const double h = grid.dr();
    const double reaction = h * h * (c.gamma * c.gamma) / (params.eps() * params.eps());

    TridiagonalSystem sys(grid.size());
    sys.excess.assign(grid.size(), 0.0);
    for (std::size_t i = 1; i < grid.intervals(); ++i) {
        const double r = grid.node(i);
        sys.sub[i] = grid.node(i - 1);
        sys.diag[i] = -2.0 * r - reaction * r;
        sys.super[i] = grid.node(i + 1);
        sys.excess[i] = reaction * r;
    }
    set_boundary_rows(sys, c.q_bc);
    return sys;
}

TridiagonalSystem assemble_p_system(const Parameters& params, const Grid& grid,
                                    const RadialField& q_source) {
    if (q_source.grid() != grid) {
        throw ValidationError("assemble_p_system: q_source is sampled on a different grid");
    }
    const auto c = derive_constants(params);
    const double a2 = params.alpha() * params.alpha();
    const double b2 = params.beta() * params.beta();
    const double h = grid.dr();
    const double source = h * h * (a2 - b2) / (params.e33() * params.eps() * params.eps());

    TridiagonalSystem sys(grid.size());
    sys.excess.assign(grid.size(), 0.0);
    for (std::size_t i = 1; i < grid.intervals(); ++i) {
        const double r = grid.node(i);
        sys.sub[i] = grid.node(i - 1);
        sys.diag[i] = -2.0 * r;
        sys.super[i] = grid.node(i + 1);
        sys.rhs[i] = source * r * q_source[i];
    }
    set_boundary_rows(sys, c.p_bc);
    return sys;
}

RadialField solve_q_fd(const Parameters& params, const Grid& grid) {
    if (auto msg = resolution_message(params, grid); !msg.empty()) {
        warn(msg);
    }
    return RadialField(grid, solve_tridiagonal(assemble_q_system(params, grid)));
}

RadialField solve_p_fd(const Parameters& params, const Grid& grid, const RadialField& q_source) {
    return RadialField(grid, solve_tridiagonal(assemble_p_system(params, grid, q_source)));
}

DecoupledPair solve_decoupled_fd(const Parameters& params, const Grid& grid) {
    RadialField q = solve_q_fd(params, grid);
    RadialField p = solve_p_fd(params, grid, q);
    return {std::move(q), std::move(p)};
}

BlockTridiagonalSystem assemble_coupled_system(const Parameters& params, const Grid& grid) {
    const double h = grid.dr();
    const double scale = h * h / (params.e33() * params.eps() * params.eps());
    const double ta = scale * params.alpha() * params.alpha();
    const double tb = scale * params.beta() * params.beta();

    // Unknown block i is (p_t, p_c) at r_i. Interior rows:
    //   p_t:  (r p_t)'' stencil - ta r (p_t - p_c) = 0
    //   p_c:  (r p_c)'' stencil + tb r (p_t - p_c) = 0
    BlockTridiagonalSystem sys(grid.size());
    for (std::size_t i = 1; i < grid.intervals(); ++i) {
        const double r = grid.node(i);
        sys.sub[i] = Mat2::identity(grid.node(i - 1));
        sys.diag[i] = Mat2{-2.0 * r - ta * r, ta * r, tb * r, -2.0 * r - tb * r};
        sys.super[i] = Mat2::identity(grid.node(i + 1));
    }
    const std::size_t n = grid.intervals();
    sys.diag[0] = Mat2::identity(-3.0);
    sys.super[0] = Mat2::identity(4.0);
    sys.corner = Mat2::identity(-1.0);
    sys.diag[n] = Mat2::identity();
    sys.rhs[n] = Vec2{params.pi_t(), params.pi_c()};
    return sys;
}

PhasePair solve_coupled_fd(const Parameters& params, const Grid& grid) {
    if (auto msg = resolution_message(params, grid); !msg.empty()) {
        warn(msg);
    }
    const auto x = solve_block_tridiagonal(assemble_coupled_system(params, grid));
    std::vector<double> pt(x.size());
    std::vector<double> pc(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        pt[i] = x[i][0];
        pc[i] = x[i][1];
    }
    return {RadialField(grid, std::move(pt)), RadialField(grid, std::move(pc))};
}

}  // namespace biphase
