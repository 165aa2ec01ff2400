#include "nwcost/projection.hpp"

namespace nwcost {

WirelengthDistribution distribution_for(const TechnologyProfile& tech, const RentParameters& rent, double n_gates) {
    return WirelengthDistribution::make(n_gates, tech.k_effective(rent), rent);
}

int metal_layers_for(const TechnologyProfile& tech, const RentParameters& rent, double n_gates) {
    const auto area = die_area(tech, n_gates, rent);
    const auto dist = distribution_for(tech, rent, n_gates);
    return estimate_metal_layers(dist, area.total, gate_pitch(tech), tech.metal_stack, rent).layers_used;
}

Projection project(const TechnologyProfile& tech, const RentParameters& rent, double n_gates) {
    Projection out;
    out.technology = tech.name;
    out.n_gates = n_gates;
    out.rent = rent;

    // interconnect
    out.partition_layers = tech.terminal_partition_layers();
    const PartitionScheme part{out.partition_layers};
    out.terminal_split = split_terminals(n_gates, rent, part);
    out.k_effective = tech.k_effective(rent);
    out.metal_interconnects = total_interconnects(n_gates, rent.with_k(out.k_effective));
    out.fabric_interconnects = fabric_interconnect_count(n_gates, rent, part);

    // area
    out.die = die_area(tech, n_gates, rent);
    out.gate_pitch = gate_pitch(tech);

    // metal layers
    const auto dist = distribution_for(tech, rent, n_gates);
    out.metal = estimate_metal_layers(dist, out.die.total, out.gate_pitch, tech.metal_stack, rent);

    // cost
    out.cost_paper = chip_cost(tech, out.die.total, out.metal.layers_used, CostMode::PaperConstants);
    out.cost_eq13 = chip_cost(tech, out.die.total, out.metal.layers_used, CostMode::Eq13Faithful);
    return out;
}

}  // namespace nwcost
