#include "biphase/phases.hpp"

#include <vector>

namespace biphase {

PhasePair to_phases(const RadialField& q, const RadialField& p) {
    require_same_grid(q, p, "to_phases");
    std::vector<double> pt(q.size());
    std::vector<double> pc(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        pt[i] = p[i] + q[i];
        pc[i] = p[i] - q[i];
    }
    return {RadialField(q.grid(), std::move(pt)), RadialField(q.grid(), std::move(pc))};
}

DecoupledPair from_phases(const RadialField& pt, const RadialField& pc) {
    require_same_grid(pt, pc, "from_phases");
    std::vector<double> q(pt.size());
    std::vector<double> p(pt.size());
    for (std::size_t i = 0; i < pt.size(); ++i) {
        q[i] = (pt[i] - pc[i]) / 2.0;
        p[i] = (pt[i] + pc[i]) / 2.0;
    }
    return {RadialField(pt.grid(), std::move(q)), RadialField(pt.grid(), std::move(p))};
}

}  // namespace biphase
