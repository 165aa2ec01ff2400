// nwcost: command-line front end for projections, comparisons, curve export
// and library calibration.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nwcost/calibrate.hpp"
#include "nwcost/errors.hpp"
#include "nwcost/projection.hpp"
#include "nwcost/report.hpp"
#include "nwcost/techlib.hpp"

namespace {

using namespace nwcost;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
        out.push_back(item.substr(b, e - b + 1));
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

double parse_gates(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("gate count '" + text + "' is not a number");
    }
    if (used != text.size()) throw UsageError("gate count '" + text + "' is not a number");
    if (!std::isfinite(value) || value < 1.0) throw UsageError("gate count must be >= 1, got '" + text + "'");
    return value;
}

std::vector<double> parse_gate_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) out.push_back(parse_gates(item));
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
}

struct CommonOptions {
    std::string library;
    std::string mode = "paper-constants";
    std::string format = "table";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_mode) {
    cmd->add_option("--library", opts.library, "library file, 'builtin' or 'builtin:uncalibrated'");
    if (with_mode)
        cmd->add_option("--mode", opts.mode, "cost mode")->check(CLI::IsMember({"paper-constants", "eq13", "eq13-faithful"}));
    cmd->add_option("--out", opts.out, "output path (default stdout)");
}

TechnologyLibrary open_library(const CommonOptions& opts) {
    return load_library(opts.library.empty() ? default_library_source() : opts.library);
}

int run(int argc, char** argv) {
    CLI::App app{"Interconnect, area, metal-layer and cost projections for stacked-nanowire and 3-D ICs", "nwcost"};
    app.require_subcommand(1);

    CommonOptions project_opts;
    std::string project_tech, project_gates;
    auto* project_cmd = app.add_subcommand("project", "project one technology at one design size");
    project_cmd->add_option("--tech", project_tech, "technology name")->required();
    project_cmd->add_option("--gates", project_gates, "gate count, scientific notation accepted")->required();
    add_common(project_cmd, project_opts, true);
    project_cmd->add_option("--format", project_opts.format)->check(CLI::IsMember({"table", "machine"}));

    CommonOptions compare_opts;
    std::string compare_techs = "cmos2d,tsv3d,m3d,sn3d", compare_gates = "5e6,1e7,2e7";
    auto* compare_cmd = app.add_subcommand("compare", "compare technologies across design sizes");
    compare_cmd->add_option("--tech", compare_techs, "comma-separated technologies")->capture_default_str();
    compare_cmd->add_option("--gates", compare_gates, "comma-separated gate counts")->capture_default_str();
    add_common(compare_cmd, compare_opts, true);
    compare_cmd->add_option("--format", compare_opts.format)->check(CLI::IsMember({"table", "machine"}));

    CommonOptions export_opts;
    std::string export_tech, export_gates;
    int samples = 200;
    auto* export_cmd = app.add_subcommand("export-distribution", "write (l, i, I, L) samples as CSV");
    export_cmd->add_option("--tech", export_tech, "technology name")->required();
    export_cmd->add_option("--gates", export_gates, "gate count")->required();
    export_cmd->add_option("--samples", samples, "log-uniform sample count (>= 2)")->capture_default_str();
    add_common(export_cmd, export_opts, false);

    CommonOptions calibrate_opts;
    std::string report_path;
    auto* calibrate_cmd = app.add_subcommand("calibrate", "fit stack and cost knobs to the reference targets");
    add_common(calibrate_cmd, calibrate_opts, false);
    calibrate_cmd->add_option("--report", report_path, "calibration report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_record("usage", e.what(), static_cast<int>(ExitCode::Usage)) << "\n";
        return static_cast<int>(ExitCode::Usage);
    }

    if (project_cmd->parsed()) {
        const double n = parse_gates(project_gates);
        const auto mode = parse_cost_mode(project_opts.mode);
        const auto lib = open_library(project_opts);
        const auto doc = projection_document(project(lib, project_tech, n), lib.library_version, mode);
        emit(project_opts.format == "machine" ? to_machine_text(doc) : projection_table(doc), project_opts.out);
    } else if (compare_cmd->parsed()) {
        ComparisonRequest req{split_list(compare_techs), parse_gate_list(compare_gates),
                              parse_cost_mode(compare_opts.mode)};
        if (req.technologies.size() < 2) throw UsageError("compare needs at least two technologies");
        const auto lib = open_library(compare_opts);
        const auto doc = comparison_document(lib, req);
        emit(compare_opts.format == "machine" ? to_machine_text(doc) : comparison_table(doc), compare_opts.out);
    } else if (export_cmd->parsed()) {
        const double n = parse_gates(export_gates);
        if (samples < 2) throw UsageError("sample count must be at least 2");
        const auto lib = open_library(export_opts);
        const auto dist = distribution_for(lib.profile(export_tech), lib.rent, n);
        emit(distribution_csv(sample_distribution(dist, samples)), export_opts.out);
    } else if (calibrate_cmd->parsed()) {
        const auto lib = open_library(calibrate_opts);
        const auto [calibrated, report] = calibrate(lib);
        if (!calibrate_opts.out.empty()) emit(library_to_text(calibrated), calibrate_opts.out);
        emit(calibration_report_to_text(report), report_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nwcost::Error& e) {
        std::cerr << nwcost::error_record(e.kind(), e.what(), static_cast<int>(e.exit_code())) << "\n";
        return static_cast<int>(e.exit_code());
    } catch (const std::exception& e) {
        std::cerr << nwcost::error_record("internal", e.what(), static_cast<int>(nwcost::ExitCode::Model)) << "\n";
        return static_cast<int>(nwcost::ExitCode::Model);
    }
}
