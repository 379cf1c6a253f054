#include "biphase/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "biphase/errors.hpp"

namespace biphase {

Grid::Grid(std::size_t n) : n_(n) {
    if (n < min_intervals) {
        std::ostringstream os;
        os << "grid needs at least " << min_intervals << " intervals, got " << n;
        throw ValidationError(os.str());
    }
}

Grid Grid::resolving(double gamma, double eps, double nodes_per_efold, std::size_t min_n) {
    if (!(gamma > 0.0) || !(eps > 0.0) || !(nodes_per_efold > 0.0)) {
        throw ValidationError("Grid::resolving needs positive gamma, eps and nodes_per_efold");
    }
    const auto needed = static_cast<std::size_t>(std::ceil(nodes_per_efold * gamma / eps));
    return Grid(std::max({needed, min_n, min_intervals}));
}

std::vector<double> Grid::nodes() const {
    std::vector<double> r(size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = node(i);
    }
    return r;
}

RadialField::RadialField(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        std::ostringstream os;
        os << "field has " << values_.size() << " samples but the grid has " << grid_.size()
           << " nodes";
        throw ValidationError(os.str());
    }
    const auto bad = std::find_if(values_.begin(), values_.end(),
                                  [](double v) { return !std::isfinite(v); });
    if (bad != values_.end()) {
        throw ValidationError("non-finite field value at node " +
                              std::to_string(bad - values_.begin()));
    }
}

RadialField RadialField::constant(const Grid& grid, double value) {
    return RadialField(grid, std::vector<double>(grid.size(), value));
}

void require_same_grid(const RadialField& a, const RadialField& b, const char* context) {
    if (a.grid() != b.grid()) {
        std::ostringstream os;
        os << context << ": grid mismatch (" << a.grid().intervals() << " vs "
           << b.grid().intervals() << " intervals)";
        throw ValidationError(os.str());
    }
}

double max_abs_difference(const RadialField& a, const RadialField& b) {
    require_same_grid(a, b, "max_abs_difference");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace biphase
