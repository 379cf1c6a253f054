#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace biphase {

/**
 * Row-wise tridiagonal system
 *
 *   sub[i] x[i-1] + diag[i] x[i] + super[i] x[i+1] = rhs[i]
 *
 * sub[0] and super[n-1] are ignored. `corner` is an extra entry in row 0,
 * column 2, produced by one-sided boundary stencils; eliminate_corner()
 * folds it away using row 1 before the sweep.
 *
 * `excess` is optional. When filled it holds the exact row sums negated,
 * excess[i] = -(sub[i] + diag[i] + super[i] + corner), and the sweep builds
 * its pivots from it instead of from diag. For diffusion rows whose
 * off-diagonals nearly cancel the diagonal this avoids the cancellation.
 */
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;
    std::vector<double> rhs;
    std::vector<double> excess;
    double corner = 0.0;

    explicit TridiagonalSystem(std::size_t n = 0)
        : sub(n, 0.0), diag(n, 0.0), super(n, 0.0), rhs(n, 0.0) {}

    std::size_t size() const noexcept { return diag.size(); }

    /// Row 0 -= (corner / super[1]) * row 1. After this the system is
    /// strictly tridiagonal. Throws SolverError if super[1] is zero.
    void eliminate_corner();
};

/// Thomas elimination. Throws ValidationError on inconsistent sizes and
/// SolverError on a zero pivot. A nonzero corner is eliminated first.
std::vector<double> solve_tridiagonal(TridiagonalSystem system);

using Vec2 = std::array<double, 2>;

/// Row-major 2x2 block.
struct Mat2 {
    double a00 = 0.0, a01 = 0.0, a10 = 0.0, a11 = 0.0;

    static Mat2 identity(double s = 1.0) { return {s, 0.0, 0.0, s}; }
    double det() const noexcept { return a00 * a11 - a01 * a10; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Vec2 operator*(const Mat2& x, const Vec2& v);
Mat2 operator-(const Mat2& x, const Mat2& y);
Vec2 operator-(const Vec2& x, const Vec2& y);

/// Block tridiagonal system with 2x2 blocks; same layout as
/// TridiagonalSystem, including the row-0 / block-column-2 corner.
struct BlockTridiagonalSystem {
    std::vector<Mat2> sub;
    std::vector<Mat2> diag;
    std::vector<Mat2> super;
    std::vector<Vec2> rhs;
    Mat2 corner{};

    explicit BlockTridiagonalSystem(std::size_t n = 0)
        : sub(n), diag(n), super(n), rhs(n, Vec2{0.0, 0.0}) {}

    std::size_t size() const noexcept { return diag.size(); }

    void eliminate_corner();
};

/// Block Thomas elimination. Throws SolverError on a singular pivot block.
std::vector<Vec2> solve_block_tridiagonal(BlockTridiagonalSystem system);

}  // namespace biphase
