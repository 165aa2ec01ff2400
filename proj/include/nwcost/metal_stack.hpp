#pragma once

#include <span>
#include <vector>

#include "nwcost/rent.hpp"
#include "nwcost/wirelength.hpp"

namespace nwcost {

/// One routing layer: wire pitch (lambda), routing efficiency mu in (0, 1],
/// and blockout area of a single via through it (lambda^2).
struct MetalLayerSpec {
    double wire_pitch = 8.0;
    double routing_efficiency = 0.4;
    double via_blockout = 64.0;

    bool operator==(const MetalLayerSpec&) const = default;
};

struct LayerAssignment {
    double l_start = 1.0;      // gate pitches
    double l_end = 1.0;        // gate pitches
    double routed_length = 0;  // lambda
    double available_length = 0;  // lambda
    double via_area = 0;       // lambda^2
};

struct MetalStackPlan {
    int layers_used = 1;
    std::vector<LayerAssignment> per_layer;
    double unrouted_remainder = 0.0;  // lambda

    double routed_total() const;
};

/// Sharing factor 4 / (f.o. + 3).
double sharing_factor(double fanout);

/// 2 A_v (N f.o. - I(l_i)). ConsistencyError if routed_count exceeds N f.o.
double via_blockout_area(const MetalLayerSpec& layer, double n_gates, double fanout, double routed_count);

/// max(0, mu A_die - A_vias) / w.
double layer_available_length(const MetalLayerSpec& layer, double die_area, double vias_area);

/// Tiered default stack: pitches 8,8,12,12,16,16,24,24,... lambda times
/// `pitch_scale`, uniform `routing_efficiency`, via blockout = pitch^2.
std::vector<MetalLayerSpec> tiered_stack(double routing_efficiency, double pitch_scale, int layers = 12);

/// Bottom-up assignment of the distribution onto successive metal layers.
/// Layer i takes the longest prefix [l_{i-1}, l_i] whose shared length fits
/// its available routing length. Beyond the end of `stack` the topmost layer
/// is repeated. Throws StuckProgressError when a layer has no capacity left
/// while wire remains (or after `max_layers`).
MetalStackPlan estimate_metal_layers(const WirelengthDistribution& dist, double die_area, double gate_pitch,
                                     std::span<const MetalLayerSpec> stack, const RentParameters& rent,
                                     int max_layers = 64);

}  // namespace nwcost
