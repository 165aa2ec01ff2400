#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nwcost/area.hpp"
#include "nwcost/cost.hpp"
#include "nwcost/metal_stack.hpp"
#include "nwcost/rent.hpp"

namespace nwcost {

/// How a technology integrates devices; decides which formulas apply.
enum class IntegrationStyle {
    Planar,           // 2-D CMOS
    TsvStacked,       // die stacking with through-silicon vias
    Monolithic,       // sequential tiers joined by monolithic inter-tier vias
    StackedNanowire,  // transistor-level 3-D fabric
};

std::string_view to_string(IntegrationStyle style);
IntegrationStyle parse_integration_style(std::string_view text);

struct TechnologyProfile {
    std::string name;
    IntegrationStyle style = IntegrationStyle::Planar;
    double gate_area = 3125.0;  // lambda^2 per average gate, before tier folding
    int tiers = 1;
    int nanowire_layers = 1;
    std::optional<ViaSpec> via;
    ProcessStepCounts die_steps;
    ProcessStepCounts metal_steps;
    std::vector<MetalLayerSpec> metal_stack;
    double bonding_per_area = 0.0;     // k_c / lambda^2
    double cooling_coefficient = 0.0;  // k_c / lambda^2 per unit relative temperature
    double relative_temperature = 1.0;
    std::optional<double> paper_cpd;   // published die process constant, multiple of k_c

    /// Number of layers across which Rent terminals are split: nanowire
    /// layers for stacked fabrics, tiers for monolithic stacks, 1 otherwise.
    int terminal_partition_layers() const;

    /// k reduced to the share that still reaches the metal stack.
    double k_effective(const RentParameters& rent) const;

    /// Throws ValidationError naming the field path "<prefix>.<field>".
    void validate(const std::string& prefix) const;

    bool operator==(const TechnologyProfile&) const = default;
};

}  // namespace nwcost
