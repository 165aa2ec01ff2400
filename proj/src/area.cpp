#include "nwcost/area.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nwcost/errors.hpp"
#include "nwcost/technology.hpp"

namespace nwcost {

GateGeometry::GateGeometry(double gate_area) : gate_area_(gate_area), pitch_(std::sqrt(gate_area)) {
    if (!(std::isfinite(gate_area) && gate_area > 0.0))
        throw DomainError("gate area must be positive, got " + std::to_string(gate_area));
}

double inter_tier_via_count(double n_gates, const RentParameters& rent, int tiers, double count_coefficient) {
    if (tiers < 1) throw DomainError("tier count must be >= 1, got " + std::to_string(tiers));
    if (!(count_coefficient >= 0.0))
        throw DomainError("via count coefficient must be non-negative");
    if (tiers == 1) return 0.0;
    const double absorbed = 1.0 - metal_terminal_fraction(tiers, rent.p());
    return count_coefficient * total_interconnects(n_gates, rent) * absorbed;
}

DieArea die_area(const TechnologyProfile& tech, double n_gates, const RentParameters& rent) {
    if (!(std::isfinite(n_gates) && n_gates >= 1.0))
        throw DomainError("n_gates must be >= 1, got " + std::to_string(n_gates));
    if (!(tech.gate_area > 0.0)) throw ConfigError("profile '" + tech.name + "' has no gate area");
    if (tech.tiers < 1) throw ConfigError("profile '" + tech.name + "' has tiers < 1");

    DieArea area;
    area.gates_area = n_gates * tech.gate_area / tech.tiers;
    if (tech.via && tech.tiers > 1) {
        const double vias = inter_tier_via_count(n_gates, rent, tech.tiers, tech.via->count_coefficient);
        area.via_overhead = vias * tech.via->blockout_area;
    }
    area.total = area.gates_area + area.via_overhead;
    return area;
}

double gate_pitch(const TechnologyProfile& tech) {
    return GateGeometry(tech.gate_area / std::max(tech.tiers, 1)).gate_pitch();
}

}  // namespace nwcost
