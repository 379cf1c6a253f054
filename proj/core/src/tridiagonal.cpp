#include "biphase/tridiagonal.hpp"

#include <cmath>
#include <sstream>

#include "biphase/errors.hpp"

namespace biphase {

namespace {

void check_sizes(std::size_t sub, std::size_t diag, std::size_t super, std::size_t rhs) {
    if (sub != diag || super != diag || rhs != diag) {
        std::ostringstream os;
        os << "tridiagonal sizes disagree: sub=" << sub << " diag=" << diag
           << " super=" << super << " rhs=" << rhs;
        throw ValidationError(os.str());
    }
}

Mat2 inverse(const Mat2& m, std::size_t row) {
    const double d = m.det();
    if (d == 0.0 || !std::isfinite(d)) {
        throw SolverError("singular pivot block in block Thomas sweep", row);
    }
    return {m.a11 / d, -m.a01 / d, -m.a10 / d, m.a00 / d};
}

}  // namespace

void TridiagonalSystem::eliminate_corner() {
    if (corner == 0.0) {
        return;
    }
    if (size() < 3) {
        throw ValidationError("corner entry needs at least 3 rows");
    }
    if (super[1] == 0.0) {
        throw SolverError("cannot eliminate corner: zero super-diagonal", 1);
    }
    const double f = corner / super[1];
    diag[0] -= f * sub[1];
    super[0] -= f * diag[1];
    rhs[0] -= f * rhs[1];
    if (!excess.empty()) {
        excess[0] -= f * excess[1];
    }
    corner = 0.0;
}

std::vector<double> solve_tridiagonal(TridiagonalSystem system) {
    check_sizes(system.sub.size(), system.diag.size(), system.super.size(), system.rhs.size());
    const std::size_t n = system.size();
    if (n == 0) {
        return {};
    }
    const bool use_excess = !system.excess.empty();
    if (use_excess && system.excess.size() != n) {
        throw ValidationError("tridiagonal excess has the wrong size");
    }
    system.eliminate_corner();

    auto& c = system.super;
    auto& d = system.rhs;
    // with pivot m = -(g + super): g_i = excess_i - sub_i g_{i-1} / m_{i-1}
    double g = 0.0;
    double prev_pivot = 1.0;
    // forward sweep, overwriting super/rhs with the normalized factors
    for (std::size_t i = 0; i < n; ++i) {
        double pivot = 0.0;
        if (use_excess) {
            g = system.excess[i] - (i == 0 ? 0.0 : system.sub[i] * g / prev_pivot);
            pivot = -(g + (i + 1 < n ? c[i] : 0.0));
            prev_pivot = pivot;
        } else {
            pivot = i == 0 ? system.diag[0] : system.diag[i] - system.sub[i] * c[i - 1];
        }
        if (pivot == 0.0 || !std::isfinite(pivot)) {
            throw SolverError("zero pivot in Thomas sweep", i);
        }
        c[i] = i + 1 < n ? c[i] / pivot : 0.0;
        d[i] = (i == 0 ? d[0] : d[i] - system.sub[i] * d[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        d[i] -= c[i] * d[i + 1];
    }
    return std::move(d);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a00 * y.a00 + x.a01 * y.a10, x.a00 * y.a01 + x.a01 * y.a11,
            x.a10 * y.a00 + x.a11 * y.a10, x.a10 * y.a01 + x.a11 * y.a11};
}

Vec2 operator*(const Mat2& x, const Vec2& v) {
    return {x.a00 * v[0] + x.a01 * v[1], x.a10 * v[0] + x.a11 * v[1]};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a00 - y.a00, x.a01 - y.a01, x.a10 - y.a10, x.a11 - y.a11};
}

Vec2 operator-(const Vec2& x, const Vec2& y) { return {x[0] - y[0], x[1] - y[1]}; }

void BlockTridiagonalSystem::eliminate_corner() {
    if (corner.a00 == 0.0 && corner.a01 == 0.0 && corner.a10 == 0.0 && corner.a11 == 0.0) {
        return;
    }
    if (size() < 3) {
        throw ValidationError("corner block needs at least 3 block rows");
    }
    const Mat2 f = corner * inverse(super[1], 1);
    diag[0] = diag[0] - f * sub[1];
    super[0] = super[0] - f * diag[1];
    rhs[0] = rhs[0] - f * rhs[1];
    corner = Mat2{};
}

std::vector<Vec2> solve_block_tridiagonal(BlockTridiagonalSystem system) {
    check_sizes(system.sub.size(), system.diag.size(), system.super.size(), system.rhs.size());
    const std::size_t n = system.size();
    if (n == 0) {
        return {};
    }
    system.eliminate_corner();

    auto& c = system.super;
    auto& d = system.rhs;
    for (std::size_t i = 0; i < n; ++i) {
        const Mat2 pivot = i == 0 ? system.diag[0] : system.diag[i] - system.sub[i] * c[i - 1];
        const Mat2 inv = inverse(pivot, i);
        if (i + 1 < n) {
            c[i] = inv * c[i];
        }
        d[i] = inv * (i == 0 ? d[0] : d[i] - system.sub[i] * d[i - 1]);
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        d[i] = d[i] - c[i] * d[i + 1];
    }
    return std::move(d);
}

}  // namespace biphase
