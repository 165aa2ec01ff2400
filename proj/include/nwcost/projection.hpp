#pragma once

#include <string>

#include "nwcost/area.hpp"
#include "nwcost/cost.hpp"
#include "nwcost/metal_stack.hpp"
#include "nwcost/rent.hpp"
#include "nwcost/techlib.hpp"
#include "nwcost/technology.hpp"
#include "nwcost/wirelength.hpp"

namespace nwcost {

/// Every intermediate of the interconnect -> area -> metal -> cost pipeline
/// for one technology at one design size.
struct Projection {
    std::string technology;
    double n_gates = 0.0;
    RentParameters rent;
    int partition_layers = 1;
    TerminalSplit terminal_split;
    double metal_interconnects = 0.0;
    double fabric_interconnects = 0.0;
    double k_effective = 0.0;
    DieArea die;
    double gate_pitch = 0.0;
    MetalStackPlan metal;
    CostBreakdown cost_paper;
    CostBreakdown cost_eq13;

    const CostBreakdown& cost(CostMode mode) const {
        return mode == CostMode::PaperConstants ? cost_paper : cost_eq13;
    }
};

/// Wirelength distribution of the metal-routed interconnects of `tech`.
WirelengthDistribution distribution_for(const TechnologyProfile& tech, const RentParameters& rent, double n_gates);

/// Only the metal layer count, for sweeps that need nothing else.
int metal_layers_for(const TechnologyProfile& tech, const RentParameters& rent, double n_gates);

Projection project(const TechnologyProfile& tech, const RentParameters& rent, double n_gates);

inline Projection project(const TechnologyLibrary& library, const std::string& tech, double n_gates) {
    return project(library.profile(tech), library.rent, n_gates);
}

}  // namespace nwcost
