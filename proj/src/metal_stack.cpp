#include "nwcost/metal_stack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nwcost/errors.hpp"

namespace nwcost {

double MetalStackPlan::routed_total() const {
    return std::accumulate(per_layer.begin(), per_layer.end(), 0.0,
                           [](double acc, const LayerAssignment& a) { return acc + a.routed_length; });
}

double sharing_factor(double fanout) { return 4.0 / (fanout + 3.0); }

double via_blockout_area(const MetalLayerSpec& layer, double n_gates, double fanout, double routed_count) {
    const double fanout_wires = n_gates * fanout;
    if (routed_count < 0.0 || routed_count > fanout_wires * (1.0 + 1e-12))
        throw ConsistencyError("routed interconnect count " + std::to_string(routed_count) +
                               " exceeds the fan-out interconnect total " + std::to_string(fanout_wires));
    return 2.0 * layer.via_blockout * std::max(0.0, fanout_wires - routed_count);
}

double layer_available_length(const MetalLayerSpec& layer, double die_area, double vias_area) {
    return std::max(0.0, layer.routing_efficiency * die_area - vias_area) / layer.wire_pitch;
}

std::vector<MetalLayerSpec> tiered_stack(double routing_efficiency, double pitch_scale, int layers) {
    std::vector<MetalLayerSpec> stack;
    stack.reserve(static_cast<std::size_t>(std::max(layers, 0)));
    for (int i = 0; i < layers; ++i) {
        // pairs run 8, 12, 16, 24, 32, 48, ...: every second pair doubles
        const int pair = i / 2;
        const double base = (pair % 2 == 0 ? 8.0 : 12.0) * std::ldexp(1.0, pair / 2);
        const double w = base * pitch_scale;
        stack.push_back({w, routing_efficiency, w * w});
    }
    return stack;
}

MetalStackPlan estimate_metal_layers(const WirelengthDistribution& dist, double die_area, double gate_pitch,
                                     std::span<const MetalLayerSpec> stack, const RentParameters& rent,
                                     int max_layers) {
    if (stack.empty()) throw ConfigError("metal stack is empty");
    if (!(die_area > 0.0)) throw DomainError("die area must be positive");
    if (!(gate_pitch > 0.0)) throw DomainError("gate pitch must be positive");

    MetalStackPlan plan;
    const double top = dist.max_length();
    if (dist.empty() || !(top > 1.0)) {
        plan.layers_used = 1;
        plan.per_layer.push_back({1.0, std::max(top, 1.0), 0.0, 0.0, 0.0});
        return plan;
    }

    const double chi = sharing_factor(rent.fanout());
    const double to_lambda = chi * gate_pitch;
    const double tolerance = 1e-6 * (top - 1.0);

    double l_prev = 1.0;
    double count_below = 0.0;
    double remaining = to_lambda * dist.length_between(1.0, top);

    for (int i = 0; i < max_layers; ++i) {
        const MetalLayerSpec& layer = stack[std::min<std::size_t>(i, stack.size() - 1)];
        LayerAssignment assign;
        assign.l_start = l_prev;
        assign.via_area = via_blockout_area(layer, dist.n_gates(), rent.fanout(), count_below);
        assign.available_length = layer_available_length(layer, die_area, assign.via_area);

        if (remaining <= assign.available_length) {
            assign.l_end = top;
            assign.routed_length = remaining;
            plan.per_layer.push_back(assign);
            plan.layers_used = i + 1;
            plan.unrouted_remainder = 0.0;
            return plan;
        }
        if (assign.available_length <= 0.0)
            throw StuckProgressError("metal layer " + std::to_string(i + 1) +
                                     " has no routing capacity left with " + std::to_string(remaining) +
                                     " lambda of wire unrouted");

        // largest l with chi u (L(l) - L(l_prev)) <= L_av
        double lo = l_prev;
        double hi = top;
        while (hi - lo > tolerance) {
            const double mid = 0.5 * (lo + hi);
            if (to_lambda * dist.length_between(l_prev, mid) <= assign.available_length)
                lo = mid;
            else
                hi = mid;
        }
        assign.l_end = lo;
        assign.routed_length = to_lambda * dist.length_between(l_prev, lo);
        count_below += dist.count_between(l_prev, lo);
        remaining -= assign.routed_length;
        plan.per_layer.push_back(assign);
        l_prev = lo;
    }
    plan.layers_used = max_layers;
    plan.unrouted_remainder = remaining;
    throw StuckProgressError("wire still unrouted after " + std::to_string(max_layers) + " metal layers");
}

}  // namespace nwcost
