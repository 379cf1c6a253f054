#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace biphase {

/// Uniform discretization r_i = i / n of [0, 1], i = 0..n.
class Grid {
public:
    static constexpr std::size_t min_intervals = 8;

    /// Throws ValidationError when n < min_intervals.
    explicit Grid(std::size_t n);

    /// Smallest grid with at least `nodes_per_efold` nodes per layer
    /// e-folding length eps/gamma, and no fewer than `min_n` intervals.
    static Grid resolving(double gamma, double eps, double nodes_per_efold = 10.0,
                          std::size_t min_n = min_intervals);

    std::size_t intervals() const noexcept { return n_; }
    std::size_t size() const noexcept { return n_ + 1; }
    double dr() const noexcept { return 1.0 / static_cast<double>(n_); }
    double node(std::size_t i) const noexcept {
        return i == n_ ? 1.0 : static_cast<double>(i) / static_cast<double>(n_);
    }
    std::vector<double> nodes() const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t n_;
};

/// Scalar samples on the nodes of a Grid.
class RadialField {
public:
    /// Throws ValidationError when the sample count does not match the grid
    /// or any value is not finite.
    RadialField(Grid grid, std::vector<double> values);

    /// Samples f(r_i) at every node.
    template <typename F>
    static RadialField sample(const Grid& grid, F&& f) {
        std::vector<double> values(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            values[i] = f(grid.node(i));
        }
        return RadialField(grid, std::move(values));
    }

    static RadialField constant(const Grid& grid, double value);

    const Grid& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double front() const { return values_.front(); }
    double back() const { return values_.back(); }

private:
    Grid grid_;
    std::vector<double> values_;
};

/// Throws ValidationError unless both fields live on the same grid.
void require_same_grid(const RadialField& a, const RadialField& b, const char* context);

/// Max-norm of a - b.
double max_abs_difference(const RadialField& a, const RadialField& b);

}  // namespace biphase
