#pragma once

#include "nwcost/rent.hpp"

namespace nwcost {

struct TechnologyProfile;

/// Average gate footprint in lambda^2 and the derived gate pitch.
class GateGeometry {
public:
    explicit GateGeometry(double gate_area);

    double gate_area() const noexcept { return gate_area_; }
    double gate_pitch() const noexcept { return pitch_; }

private:
    double gate_area_;
    double pitch_;
};

/// Inter-tier via parameters: blockout per via (lambda^2) and the multiplier
/// applied to the Rent-derived inter-tier interconnect count.
struct ViaSpec {
    double blockout_area = 0.0;
    double count_coefficient = 1.0;

    bool operator==(const ViaSpec&) const = default;
};

struct DieArea {
    double gates_area = 0.0;
    double via_overhead = 0.0;
    double total = 0.0;
};

/// alpha k (1 - tiers^(p-1)) N (1 - N^(p-1)) scaled by `count_coefficient`.
double inter_tier_via_count(double n_gates, const RentParameters& rent, int tiers, double count_coefficient = 1.0);

/// Gates occupy N * gate_area / tiers; stacked-die styles add their via blockout.
DieArea die_area(const TechnologyProfile& tech, double n_gates, const RentParameters& rent);

/// sqrt of the per-gate footprint (gate_area / tiers), in lambda.
double gate_pitch(const TechnologyProfile& tech);

}  // namespace nwcost
