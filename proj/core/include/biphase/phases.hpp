#pragma once

#include "biphase/grid.hpp"

namespace biphase {

/// Interstitial and capillary pressures sampled on a common grid.
struct PhasePair {
    RadialField pt;
    RadialField pc;
};

/// Difference/mean pressures q = (p_t - p_c)/2, p = (p_t + p_c)/2.
struct DecoupledPair {
    RadialField q;
    RadialField p;
};

/// p_t = p + q, p_c = p - q pointwise. Throws ValidationError on grid mismatch.
PhasePair to_phases(const RadialField& q, const RadialField& p);

/// Inverse of to_phases.
DecoupledPair from_phases(const RadialField& pt, const RadialField& pc);

}  // namespace biphase
