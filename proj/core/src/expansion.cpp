#include "biphase/expansion.hpp"

#include <cmath>
#include <sstream>

namespace biphase {

namespace {

void require_matching(const ExpansionSet& set, const Parameters& params) {
    if (set.gamma != derive_constants(params).gamma) {
        throw ValidationError("expansion set was built for a different decay rate");
    }
}

void require_unit_interval(double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        std::ostringstream os;
        os << "radius " << r << " is outside [0, 1]";
        throw ValidationError(os.str());
    }
}

}  // namespace

ExpansionSet build_expansion(const Parameters& params, int order) {
    const auto c = derive_constants(params);
    return build_expansion<double>(c.gamma, c.kappa, c.q_bc, c.p_bc, order);
}

void Cutoff::validate() const {
    if (!(d > 0.0 && d < 0.5)) {
        std::ostringstream os;
        os << "cutoff margin d=" << d << " must lie in (0, 0.5)";
        throw ValidationError(os.str());
    }
}

double Cutoff::operator()(double r) const {
    const double s = (r - (1.0 - 2.0 * d)) / d;
    if (s <= 0.0) {
        return 0.0;
    }
    if (s >= 1.0) {
        return 1.0;
    }
    return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

double Cutoff::derivative(double r) const {
    const double s = (r - (1.0 - 2.0 * d)) / d;
    if (s <= 0.0 || s >= 1.0) {
        return 0.0;
    }
    const double t = s * (1.0 - s);
    return 30.0 * t * t / d;
}

PolyExp layer_profile(const ExpansionSet& set, double eps) {
    PolyExp sum(set.gamma);
    double weight = 1.0;
    for (const auto& q : set.q_profiles) {
        sum = sum + q.scaled(weight);
        weight *= eps;
    }
    return sum;
}

double approximant(const ExpansionSet& set, const Parameters& params, double r, Quantity which,
                   std::optional<Cutoff> cutoff) {
    require_unit_interval(r);
    require_matching(set, params);
    const double rho = (1.0 - r) / params.eps();
    double layer = layer_profile(set, params.eps())(rho);
    if (cutoff) {
        cutoff->validate();
        layer *= (*cutoff)(r);
    }
    return which == Quantity::q ? layer : set.monophase + set.kappa * layer;
}

double approximant_dr(const ExpansionSet& set, const Parameters& params, double r,
                      Quantity which, std::optional<Cutoff> cutoff) {
    require_unit_interval(r);
    require_matching(set, params);
    const double eps = params.eps();
    const double rho = (1.0 - r) / eps;
    const PolyExp layer = layer_profile(set, eps);
    // d/dr = -(1/eps) d/drho
    double d = -layer.derivative()(rho) / eps;
    if (cutoff) {
        cutoff->validate();
        d = d * (*cutoff)(r) + layer(rho) * cutoff->derivative(r);
    }
    return which == Quantity::q ? d : set.kappa * d;
}

namespace {

// Calls visit(j, layer_value) for nodes from r = 1 inwards until the layer
// term is negligible; returns without visiting the remaining interior nodes.
template <typename Visit>
void visit_layer(const ExpansionSet& set, const Parameters& params, const Grid& grid,
                 const std::optional<Cutoff>& cutoff, double tail_tolerance, Visit visit) {
    require_matching(set, params);
    if (cutoff) {
        cutoff->validate();
    }
    const double eps = params.eps();
    const PolyExp layer = layer_profile(set, eps);
    if (layer.is_zero()) {
        return;
    }
    const double threshold = tail_tolerance * std::abs(set.q_profiles.front().coeff(0));
    const double peak = static_cast<double>(std::max(layer.degree(), 0)) / set.gamma;
    const auto& c = layer.coeffs();
    for (std::size_t j = grid.size(); j-- > 0;) {
        const double r = grid.node(j);
        const double rho = (1.0 - r) / eps;
        const double decay = std::exp(-set.gamma * rho);
        double poly = 0.0;
        double bound = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            poly = poly * rho + *it;
            bound = bound * rho + std::abs(*it);
        }
        if (tail_tolerance > 0.0 && rho > peak && bound * decay < threshold) {
            return;
        }
        double v = poly * decay;
        if (cutoff) {
            v *= (*cutoff)(r);
        }
        visit(j, v);
    }
}

}  // namespace

RadialField approximant_field(const ExpansionSet& set, const Parameters& params,
                              const Grid& grid, Quantity which, std::optional<Cutoff> cutoff,
                              double tail_tolerance) {
    const double base = which == Quantity::q ? 0.0 : set.monophase;
    const double scale = which == Quantity::q ? 1.0 : set.kappa;
    std::vector<double> values(grid.size(), base);
    visit_layer(set, params, grid, cutoff, tail_tolerance,
                [&](std::size_t j, double v) { values[j] = base + scale * v; });
    return RadialField(grid, std::move(values));
}

PhasePair approximant_phases(const ExpansionSet& set, const Parameters& params,
                             const Grid& grid, std::optional<Cutoff> cutoff,
                             double tail_tolerance) {
    std::vector<double> pt(grid.size(), set.monophase);
    std::vector<double> pc(grid.size(), set.monophase);
    visit_layer(set, params, grid, cutoff, tail_tolerance, [&](std::size_t j, double v) {
        const double p = set.monophase + set.kappa * v;
        pt[j] = p + v;
        pc[j] = p - v;
    });
    return {RadialField(grid, std::move(pt)), RadialField(grid, std::move(pc))};
}

}  // namespace biphase
