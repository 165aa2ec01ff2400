#include "nwcost/technology.hpp"

#include <cmath>

#include "nwcost/errors.hpp"

namespace nwcost {

std::string_view to_string(IntegrationStyle style) {
    switch (style) {
        case IntegrationStyle::Planar: return "planar";
        case IntegrationStyle::TsvStacked: return "tsv";
        case IntegrationStyle::Monolithic: return "monolithic";
        case IntegrationStyle::StackedNanowire: return "stacked-nanowire";
    }
    return "planar";
}

IntegrationStyle parse_integration_style(std::string_view text) {
    if (text == "planar") return IntegrationStyle::Planar;
    if (text == "tsv") return IntegrationStyle::TsvStacked;
    if (text == "monolithic") return IntegrationStyle::Monolithic;
    if (text == "stacked-nanowire") return IntegrationStyle::StackedNanowire;
    throw ConfigError("unknown integration style '" + std::string(text) + "'");
}

int TechnologyProfile::terminal_partition_layers() const {
    switch (style) {
        case IntegrationStyle::StackedNanowire: return nanowire_layers;
        case IntegrationStyle::Monolithic: return tiers;
        default: return 1;
    }
}

double TechnologyProfile::k_effective(const RentParameters& rent) const {
    return rent.k() * metal_terminal_fraction(terminal_partition_layers(), rent.p());
}

namespace {

void require(bool ok, const std::string& field, const std::string& constraint) {
    if (!ok) throw ValidationError(field, constraint);
}

bool finite_non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

void validate_steps(const ProcessStepCounts& s, const std::string& field) {
    for (int n : {s.photolithography, s.diffusion, s.etching, s.deposition, s.implantation})
        require(n >= 0, field, "process-step counts must be >= 0");
}

}  // namespace

void TechnologyProfile::validate(const std::string& prefix) const {
    const std::string p = prefix + ".";
    require(!name.empty(), p + "name", "must not be empty");
    require(std::isfinite(gate_area) && gate_area > 0.0, p + "gate_area", "must be > 0");
    require(tiers >= 1, p + "tiers", "must be >= 1");
    require(nanowire_layers >= 1, p + "nanowire_layers", "must be >= 1");

    const bool stacked_die = style == IntegrationStyle::TsvStacked || style == IntegrationStyle::Monolithic;
    if (stacked_die)
        require(tiers >= 2, p + "tiers", "stacked-die styles need at least 2 tiers");
    else
        require(tiers == 1, p + "tiers", "planar and stacked-nanowire styles have exactly 1 tier");
    if (style != IntegrationStyle::StackedNanowire)
        require(nanowire_layers == 1, p + "nanowire_layers", "only stacked-nanowire profiles may exceed 1");
    if (tiers >= 2) require(via.has_value(), p + "via", "required when tiers >= 2");
    if (tiers == 1) require(bonding_per_area == 0.0, p + "bonding_per_area", "must be 0 when tiers == 1");
    if (via) {
        require(finite_non_negative(via->blockout_area), p + "via.blockout_area", "must be finite and >= 0");
        require(finite_non_negative(via->count_coefficient), p + "via.count_coefficient",
                "must be finite and >= 0");
    }

    validate_steps(die_steps, p + "die_steps");
    validate_steps(metal_steps, p + "metal_steps");

    require(!metal_stack.empty(), p + "metal_stack", "must list at least one layer");
    for (std::size_t i = 0; i < metal_stack.size(); ++i) {
        const auto& layer = metal_stack[i];
        const std::string lp = p + "metal_stack[" + std::to_string(i) + "].";
        require(std::isfinite(layer.wire_pitch) && layer.wire_pitch > 0.0, lp + "wire_pitch", "must be > 0");
        require(layer.routing_efficiency > 0.0 && layer.routing_efficiency <= 1.0, lp + "routing_efficiency",
                "must lie in (0, 1]");
        require(finite_non_negative(layer.via_blockout), lp + "via_blockout", "must be finite and >= 0");
    }

    require(finite_non_negative(bonding_per_area), p + "bonding_per_area", "must be finite and >= 0");
    require(finite_non_negative(cooling_coefficient), p + "cooling_coefficient", "must be finite and >= 0");
    require(finite_non_negative(relative_temperature), p + "relative_temperature", "must be finite and >= 0");
    if (paper_cpd) require(finite_non_negative(*paper_cpd), p + "paper_cpd", "must be finite and >= 0");
}

}  // namespace nwcost
