#include "nwcost/techlib.hpp"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "nwcost/errors.hpp"

namespace nwcost {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const TechnologyProfile& TechnologyLibrary::profile(std::string_view name) const {
    const auto it = profiles.find(std::string(name));
    if (it == profiles.end()) throw ConfigError("unknown technology '" + std::string(name) + "'");
    return it->second;
}

void TechnologyLibrary::validate() const {
    if (profiles.empty()) throw ValidationError("profiles", "must define at least one technology");
    for (const auto& [name, prof] : profiles) {
        if (prof.name != name) throw ValidationError("profiles." + name + ".name", "must match its key");
        prof.validate("profiles." + name);
    }
}

namespace {

constexpr ProcessStepCounts kMetalSteps{2, 0, 4, 4, 0};

TechnologyProfile cmos2d_profile() {
    TechnologyProfile p;
    p.name = "cmos2d";
    p.style = IntegrationStyle::Planar;
    p.gate_area = 3125.0;
    p.die_steps = {9, 4, 5, 4, 7};
    p.metal_steps = kMetalSteps;
    p.relative_temperature = 1.0;
    p.paper_cpd = 6.26;
    return p;
}

TechnologyProfile tsv3d_profile() {
    TechnologyProfile p;
    p.name = "tsv3d";
    p.style = IntegrationStyle::TsvStacked;
    p.gate_area = 3125.0;
    p.tiers = 2;
    p.via = ViaSpec{25000.0, 0.05};
    p.die_steps = {19, 8, 13, 10, 14};
    p.metal_steps = kMetalSteps;
    p.relative_temperature = 1.4;
    p.paper_cpd = 7.26;
    return p;
}

TechnologyProfile m3d_profile() {
    TechnologyProfile p;
    p.name = "m3d";
    p.style = IntegrationStyle::Monolithic;
    p.gate_area = 3125.0;
    p.tiers = 2;
    p.via = ViaSpec{100.0, 1.0};
    p.die_steps = {19, 8, 13, 10, 14};
    p.metal_steps = kMetalSteps;
    p.relative_temperature = 1.3;
    p.paper_cpd = 7.26;
    return p;
}

TechnologyProfile sn3d_profile() {
    TechnologyProfile p;
    p.name = "sn3d";
    p.style = IntegrationStyle::StackedNanowire;
    p.gate_area = 432.0;
    p.nanowire_layers = 10;
    p.die_steps = {2, 2, 51, 40, 0};
    p.metal_steps = kMetalSteps;
    p.relative_temperature = 0.8;
    p.paper_cpd = 26.54;
    return p;
}

struct CalibratedKnobs {
    double routing_efficiency;
    double pitch_scale;
    double cooling_coefficient;
};

TechnologyLibrary assemble(const RentParameters& rent, std::string version,
                           const std::map<std::string, CalibratedKnobs>& knobs, double bonding) {
    TechnologyLibrary lib;
    lib.rent = rent;
    lib.library_version = std::move(version);
    for (auto prof : {cmos2d_profile(), tsv3d_profile(), m3d_profile(), sn3d_profile()}) {
        const auto& k = knobs.at(prof.name);
        prof.metal_stack = tiered_stack(k.routing_efficiency, k.pitch_scale);
        prof.cooling_coefficient = k.cooling_coefficient;
        prof.bonding_per_area = prof.tiers > 1 ? bonding : 0.0;
        lib.profiles.emplace(prof.name, std::move(prof));
    }
    return lib;
}

}  // namespace

TechnologyLibrary builtin_library() {
    // Output of `nwcost calibrate --library builtin:uncalibrated`; see
    // docs/calibration_report.json.
    return assemble(RentParameters(4.0, 0.66, 3.0), "builtin-calibrated-1",
                    {
                        {"cmos2d", {0.525, 0.3691, 0.785}},
                        {"tsv3d", {0.5, 0.3418, 0.0}},
                        {"m3d", {0.575, 0.2714, 10.0}},
                        {"sn3d", {0.55, 0.1849, 9.32}},
                    },
                    5.067);
}

TechnologyLibrary uncalibrated_library() {
    return assemble(RentParameters(4.0, 0.6, 3.0), "builtin-uncalibrated-1",
                    {
                        {"cmos2d", {0.4, 1.0, 0.0}},
                        {"tsv3d", {0.4, 1.0, 0.0}},
                        {"m3d", {0.4, 1.0, 0.0}},
                        {"sn3d", {0.4, 1.0, 0.0}},
                    },
                    0.0);
}

namespace {

// Typed, path-aware access to one JSON object of the document.
class Reader {
public:
    Reader(const json& node, std::string path, bool strict) : node_(node), path_(std::move(path)), strict_(strict) {
        if (!node_.is_object()) throw ValidationError(path_.empty() ? "<document>" : path_, "must be an object");
    }

    void allow(std::initializer_list<const char*> keys) const {
        if (!strict_) return;
        for (const auto& item : node_.items()) {
            bool known = false;
            for (const char* k : keys) known = known || item.key() == k;
            if (!known) throw UnknownFieldError(child(item.key()));
        }
    }

    bool has(const char* key) const { return node_.contains(key) && !node_.at(key).is_null(); }

    double number(const char* key, double fallback) const {
        if (!has(key)) return fallback;
        const auto& v = node_.at(key);
        if (!v.is_number()) throw ValidationError(child(key), "must be a number");
        return v.get<double>();
    }

    int integer(const char* key, int fallback) const {
        if (!has(key)) return fallback;
        const auto& v = node_.at(key);
        if (!v.is_number_integer()) throw ValidationError(child(key), "must be an integer");
        return v.get<int>();
    }

    std::string string(const char* key, std::string fallback) const {
        if (!has(key)) return fallback;
        const auto& v = node_.at(key);
        if (!v.is_string()) throw ValidationError(child(key), "must be a string");
        return v.get<std::string>();
    }

    Reader object(const char* key) const { return Reader(node_.at(key), child(key), strict_); }
    const json& raw(const char* key) const { return node_.at(key); }
    const json& node() const { return node_; }
    std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
    bool strict() const { return strict_; }

private:
    const json& node_;
    std::string path_;
    bool strict_;
};

ProcessStepCounts read_steps(const Reader& r, ProcessStepCounts s) {
    r.allow({"photolithography", "diffusion", "etching", "deposition", "implantation"});
    s.photolithography = r.integer("photolithography", s.photolithography);
    s.diffusion = r.integer("diffusion", s.diffusion);
    s.etching = r.integer("etching", s.etching);
    s.deposition = r.integer("deposition", s.deposition);
    s.implantation = r.integer("implantation", s.implantation);
    return s;
}

std::vector<MetalLayerSpec> read_stack(const Reader& parent) {
    const json& node = parent.raw("metal_stack");
    const std::string path = parent.child("metal_stack");
    if (node.is_array()) {
        std::vector<MetalLayerSpec> stack;
        for (std::size_t i = 0; i < node.size(); ++i) {
            Reader layer(node[i], path + "[" + std::to_string(i) + "]", parent.strict());
            layer.allow({"wire_pitch", "routing_efficiency", "via_blockout"});
            if (!layer.has("wire_pitch")) throw ValidationError(layer.child("wire_pitch"), "required");
            MetalLayerSpec spec;
            spec.wire_pitch = layer.number("wire_pitch", 0.0);
            spec.routing_efficiency = layer.number("routing_efficiency", 0.4);
            spec.via_blockout = layer.number("via_blockout", spec.wire_pitch * spec.wire_pitch);
            stack.push_back(spec);
        }
        return stack;
    }
    Reader compact(node, path, parent.strict());
    compact.allow({"tiered"});
    if (!compact.has("tiered")) throw ValidationError(path, "must be a layer list or {\"tiered\": {...}}");
    const Reader tiered = compact.object("tiered");
    tiered.allow({"routing_efficiency", "pitch_scale", "layers"});
    return tiered_stack(tiered.number("routing_efficiency", 0.4), tiered.number("pitch_scale", 1.0),
                        tiered.integer("layers", 12));
}

TechnologyProfile generic_profile(const std::string& name, IntegrationStyle style) {
    TechnologyProfile p;
    p.name = name;
    p.style = style;
    p.tiers = (style == IntegrationStyle::TsvStacked || style == IntegrationStyle::Monolithic) ? 2 : 1;
    p.metal_steps = kMetalSteps;
    p.metal_stack = tiered_stack(0.4, 1.0);
    return p;
}

TechnologyProfile read_profile(const std::string& name, const Reader& r, const TechnologyLibrary& defaults) {
    r.allow({"style", "gate_area", "tiers", "nanowire_layers", "via", "die_steps", "metal_steps", "metal_stack",
             "bonding_per_area", "cooling_coefficient", "relative_temperature", "paper_cpd"});

    TechnologyProfile p;
    const auto builtin = defaults.profiles.find(name);
    if (builtin != defaults.profiles.end()) {
        p = builtin->second;
        if (r.has("style")) p.style = parse_integration_style(r.string("style", ""));
    } else {
        if (!r.has("style")) throw ValidationError(r.child("style"), "required for user-defined profiles");
        if (!r.has("gate_area")) throw ValidationError(r.child("gate_area"), "required for user-defined profiles");
        try {
            p = generic_profile(name, parse_integration_style(r.string("style", "")));
        } catch (const ConfigError& e) {
            throw ValidationError(r.child("style"), e.what());
        }
    }

    p.gate_area = r.number("gate_area", p.gate_area);
    p.tiers = r.integer("tiers", p.tiers);
    p.nanowire_layers = r.integer("nanowire_layers", p.nanowire_layers);
    if (r.node().contains("via")) {
        if (r.raw("via").is_null()) {
            p.via.reset();
        } else {
            const Reader via = r.object("via");
            via.allow({"blockout_area", "count_coefficient"});
            ViaSpec spec = p.via.value_or(ViaSpec{});
            spec.blockout_area = via.number("blockout_area", spec.blockout_area);
            spec.count_coefficient = via.number("count_coefficient", spec.count_coefficient);
            p.via = spec;
        }
    }
    if (r.has("die_steps")) p.die_steps = read_steps(r.object("die_steps"), p.die_steps);
    if (r.has("metal_steps")) p.metal_steps = read_steps(r.object("metal_steps"), p.metal_steps);
    if (r.has("metal_stack")) p.metal_stack = read_stack(r);
    p.bonding_per_area = r.number("bonding_per_area", p.bonding_per_area);
    p.cooling_coefficient = r.number("cooling_coefficient", p.cooling_coefficient);
    p.relative_temperature = r.number("relative_temperature", p.relative_temperature);
    if (r.node().contains("paper_cpd")) {
        if (r.raw("paper_cpd").is_null())
            p.paper_cpd.reset();
        else
            p.paper_cpd = r.number("paper_cpd", 0.0);
    }
    return p;
}

std::pair<int, int> line_and_column(std::string_view text, std::size_t byte) {
    int line = 1;
    int column = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

ordered_json steps_to_json(const ProcessStepCounts& s) {
    return {{"photolithography", s.photolithography},
            {"diffusion", s.diffusion},
            {"etching", s.etching},
            {"deposition", s.deposition},
            {"implantation", s.implantation}};
}

}  // namespace

TechnologyLibrary parse_library(std::string_view text, LoadOptions options) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_and_column(text, e.byte);
        throw ParseError("malformed library document at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + e.what(),
                         line, column);
    }

    const Reader root(doc, "", options.strict);
    root.allow({"schema_version", "library_version", "rent", "profiles"});
    if (!root.has("schema_version")) throw ValidationError("schema_version", "required");
    if (root.integer("schema_version", 0) != kLibrarySchemaVersion)
        throw ValidationError("schema_version", "unsupported version (expected " +
                                                    std::to_string(kLibrarySchemaVersion) + ")");

    const TechnologyLibrary defaults = builtin_library();
    TechnologyLibrary lib;
    lib.library_version = root.string("library_version", "unversioned");

    RentParameters rent = defaults.rent;
    if (root.has("rent")) {
        const Reader r = root.object("rent");
        r.allow({"k", "p", "fanout"});
        const double k = r.number("k", rent.k());
        const double p = r.number("p", rent.p());
        const double fo = r.number("fanout", rent.fanout());
        if (!(k > 0.0)) throw ValidationError("rent.k", "Rent coefficient must be > 0");
        if (!(p > 0.0 && p < 1.0)) throw ValidationError("rent.p", "Rent exponent must satisfy 0 < p < 1");
        if (!(fo > 0.0)) throw ValidationError("rent.fanout", "fan-out must be > 0");
        rent = RentParameters(k, p, fo);
    }
    lib.rent = rent;

    if (!root.has("profiles")) throw ValidationError("profiles", "required");
    const Reader profiles = root.object("profiles");
    for (const auto& item : profiles.node().items()) {
        const Reader r(item.value(), profiles.child(item.key()), options.strict);
        lib.profiles.emplace(item.key(), read_profile(item.key(), r, defaults));
    }
    lib.validate();
    return lib;
}

TechnologyLibrary load_library(std::string_view source, LoadOptions options) {
    if (source == "builtin") return builtin_library();
    if (source == "builtin:uncalibrated") return uncalibrated_library();
    std::ifstream in{std::string(source)};
    if (!in) throw ConfigError("cannot open library file '" + std::string(source) + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_library(buffer.str(), options);
}

std::string library_to_text(const TechnologyLibrary& library) {
    ordered_json doc;
    doc["schema_version"] = kLibrarySchemaVersion;
    doc["library_version"] = library.library_version;
    doc["rent"] = {{"k", library.rent.k()}, {"p", library.rent.p()}, {"fanout", library.rent.fanout()}};
    ordered_json profiles = ordered_json::object();
    for (const auto& [name, p] : library.profiles) {
        ordered_json j;
        j["style"] = std::string(to_string(p.style));
        j["gate_area"] = p.gate_area;
        j["tiers"] = p.tiers;
        j["nanowire_layers"] = p.nanowire_layers;
        if (p.via)
            j["via"] = {{"blockout_area", p.via->blockout_area}, {"count_coefficient", p.via->count_coefficient}};
        else
            j["via"] = nullptr;
        j["die_steps"] = steps_to_json(p.die_steps);
        j["metal_steps"] = steps_to_json(p.metal_steps);
        ordered_json stack = ordered_json::array();
        for (const auto& layer : p.metal_stack)
            stack.push_back({{"wire_pitch", layer.wire_pitch},
                             {"routing_efficiency", layer.routing_efficiency},
                             {"via_blockout", layer.via_blockout}});
        j["metal_stack"] = stack;
        j["bonding_per_area"] = p.bonding_per_area;
        j["cooling_coefficient"] = p.cooling_coefficient;
        j["relative_temperature"] = p.relative_temperature;
        if (p.paper_cpd)
            j["paper_cpd"] = *p.paper_cpd;
        else
            j["paper_cpd"] = nullptr;
        profiles[name] = j;
    }
    doc["profiles"] = profiles;
    return doc.dump(2) + "\n";
}

std::string default_library_source() {
    if (const char* env = std::getenv("NWCOST_LIBRARY"); env != nullptr && *env != '\0') return env;
    return "builtin";
}

}  // namespace nwcost
