#include "nwcost/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <set>
#include <sstream>

#include "nwcost/errors.hpp"

namespace nwcost {

namespace {

// Published constants are given to two decimals.
constexpr double kDivergenceThreshold = 0.005;

Document cost_document(const CostBreakdown& c) {
    return {{"mode", std::string(to_string(c.mode))},
            {"c_pd", c.c_pd},
            {"c_pd_source", c.c_pd_from_steps ? "process-steps" : "published-constant"},
            {"c_pm", c.c_pm},
            {"die", c.die},
            {"metal", c.metal},
            {"bonding", c.bonding},
            {"cooling", c.cooling},
            {"total", c.total}};
}

Document reduction_document(const ReductionMatrix& m) {
    Document rows = Document::object();
    for (std::size_t r = 0; r < m.technologies.size(); ++r) {
        Document cols = Document::object();
        for (std::size_t c = 0; c < m.technologies.size(); ++c) cols[m.technologies[c]] = m.percent[r][c];
        rows[m.technologies[r]] = cols;
    }
    return rows;
}

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", v);
    return buf;
}

std::string gates_label(double n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", n);
    return buf;
}

// First column left-aligned, the rest right-aligned to their widest cell.
class TextTable {
public:
    TextTable(std::string title, std::vector<std::string> header) : title_(std::move(title)) { add(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const {
        std::vector<std::size_t> widths;
        for (const auto& row : rows_)
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (widths.size() <= i) widths.push_back(0);
                widths[i] = std::max(widths[i], row[i].size());
            }
        std::ostringstream os;
        os << title_ << "\n";
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t i = 0; i < rows_[r].size(); ++i) {
                if (i == 0)
                    os << std::left << std::setw(static_cast<int>(widths[i])) << rows_[r][i];
                else
                    os << "  " << std::right << std::setw(static_cast<int>(widths[i])) << rows_[r][i];
            }
            os << "\n";
        }
        return os.str();
    }

private:
    std::string title_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace

std::vector<std::string> default_technologies() { return {"cmos2d", "tsv3d", "m3d", "sn3d"}; }
std::vector<double> default_gate_counts() { return {5e6, 10e6, 20e6}; }

Document projection_document(const Projection& p, const std::string& library_version, CostMode mode) {
    Document doc;
    doc["schema"] = kProjectionSchema;
    doc["inputs"] = {{"technology", p.technology},
                     {"n_gates", p.n_gates},
                     {"library_version", library_version},
                     {"mode", std::string(to_string(mode))},
                     {"rent", {{"k", p.rent.k()}, {"p", p.rent.p()}, {"fanout", p.rent.fanout()}}}};
    doc["terminal_split"] = {{"partition_layers", p.partition_layers},
                             {"t_total", p.terminal_split.t_total},
                             {"t_metal", p.terminal_split.t_metal},
                             {"t_fabric", p.terminal_split.t_fabric},
                             {"k_metal", p.terminal_split.k_metal},
                             {"k_fabric", p.terminal_split.k_fabric}};
    doc["interconnects"] = {{"k_effective", p.k_effective},
                            {"metal", p.metal_interconnects},
                            {"fabric", p.fabric_interconnects}};
    doc["die_area"] = {{"gates", p.die.gates_area}, {"via_overhead", p.die.via_overhead}, {"total", p.die.total}};
    doc["gate_pitch"] = p.gate_pitch;

    Document layers = Document::array();
    for (const auto& a : p.metal.per_layer)
        layers.push_back({{"l_start", a.l_start},
                          {"l_end", a.l_end},
                          {"routed_length", a.routed_length},
                          {"available_length", a.available_length},
                          {"via_area", a.via_area}});
    doc["metal"] = {{"n_metal", p.metal.layers_used},
                    {"unrouted_remainder", p.metal.unrouted_remainder},
                    {"layers", layers}};
    doc["cost"] = cost_document(p.cost(mode));
    doc["cost_by_mode"] = {{"paper-constants", cost_document(p.cost_paper)}, {"eq13", cost_document(p.cost_eq13)}};
    return doc;
}

Document comparison_document(const TechnologyLibrary& library, const ComparisonRequest& request) {
    std::set<std::string> distinct(request.technologies.begin(), request.technologies.end());
    if (distinct.size() != request.technologies.size()) throw UsageError("technology list contains duplicates");
    if (request.technologies.size() < 2) throw UsageError("compare needs at least two technologies");
    if (request.gate_counts.empty()) throw UsageError("compare needs at least one gate count");
    for (const auto& t : request.technologies) library.profile(t);

    Document doc;
    doc["schema"] = kComparisonSchema;
    doc["inputs"] = {{"technologies", request.technologies},
                     {"gate_counts", request.gate_counts},
                     {"library_version", library.library_version},
                     {"mode", std::string(to_string(request.mode))},
                     {"rent", {{"k", library.rent.k()}, {"p", library.rent.p()}, {"fanout", library.rent.fanout()}}}};

    Document projections = Document::array();
    Document layer_rows = Document::array();
    Document area_rows = Document::array();
    Document stacks = Document::array();
    Document reductions = {{"paper-constants", Document::array()}, {"eq13", Document::array()}};

    for (double n : request.gate_counts) {
        Document layer_row = {{"n_gates", n}, {"values", Document::object()}};
        Document area_row = {{"n_gates", n}, {"values", Document::object()}};
        std::map<std::string, CostBreakdown> paper, eq13;
        for (const auto& t : request.technologies) {
            const auto proj = project(library, t, n);
            projections.push_back(projection_document(proj, library.library_version, request.mode));
            layer_row["values"][t] = proj.metal.layers_used;
            area_row["values"][t] = proj.die.total;
            const auto& c = proj.cost(request.mode);
            stacks.push_back({{"technology", t},
                              {"n_gates", n},
                              {"die", c.die},
                              {"metal", c.metal},
                              {"bonding", c.bonding},
                              {"cooling", c.cooling},
                              {"total", c.total}});
            paper[t] = proj.cost_paper;
            eq13[t] = proj.cost_eq13;
        }
        layer_rows.push_back(layer_row);
        area_rows.push_back(area_row);
        reductions["paper-constants"].push_back({{"n_gates", n}, {"percent", reduction_document(compare_costs(paper))}});
        reductions["eq13"].push_back({{"n_gates", n}, {"percent", reduction_document(compare_costs(eq13))}});
    }

    Document process = Document::array();
    for (const auto& t : request.technologies) {
        const auto& prof = library.profile(t);
        const double from_steps = unit_area_process_cost(prof.die_steps);
        Document row = {{"technology", t},
                        {"c_pd_process_steps", from_steps},
                        {"c_pd_published", prof.paper_cpd ? Document(*prof.paper_cpd) : Document(nullptr)},
                        {"c_pm_process_steps", unit_area_process_cost(prof.metal_steps)}};
        row["divergent"] = prof.paper_cpd && std::abs(*prof.paper_cpd - from_steps) > kDivergenceThreshold;
        process.push_back(row);
    }

    doc["metal_layers"] = layer_rows;
    doc["die_area"] = area_rows;
    doc["cost_stack"] = stacks;
    doc["reductions"] = reductions;
    doc["process_cost"] = process;
    doc["projections"] = projections;
    return doc;
}

std::string projection_table(const Document& doc) {
    const auto& in = doc.at("inputs");
    std::ostringstream os;
    os << "technology      " << in.at("technology").get<std::string>() << "\n"
       << "gates           " << gates_label(in.at("n_gates").get<double>()) << "\n"
       << "library         " << in.at("library_version").get<std::string>() << "\n"
       << "cost mode       " << in.at("mode").get<std::string>() << "\n"
       << "rent k, p, fo   " << in.at("rent").at("k").get<double>() << ", " << in.at("rent").at("p").get<double>()
       << ", " << in.at("rent").at("fanout").get<double>() << "\n\n";

    const auto& ts = doc.at("terminal_split");
    const auto& ic = doc.at("interconnects");
    TextTable inter("interconnect", {"quantity", "value"});
    inter.add({"partition layers", std::to_string(ts.at("partition_layers").get<int>())});
    inter.add({"terminals total", sci(ts.at("t_total").get<double>())});
    inter.add({"terminals metal", sci(ts.at("t_metal").get<double>())});
    inter.add({"terminals fabric", sci(ts.at("t_fabric").get<double>())});
    inter.add({"k effective", fixed(ic.at("k_effective").get<double>(), 4)});
    inter.add({"metal interconnects", sci(ic.at("metal").get<double>())});
    inter.add({"fabric interconnects", sci(ic.at("fabric").get<double>())});
    os << inter.str() << "\n";

    const auto& da = doc.at("die_area");
    TextTable area("die area (lambda^2)", {"component", "value"});
    area.add({"gates", sci(da.at("gates").get<double>())});
    area.add({"via overhead", sci(da.at("via_overhead").get<double>())});
    area.add({"total", sci(da.at("total").get<double>())});
    area.add({"gate pitch (lambda)", fixed(doc.at("gate_pitch").get<double>(), 3)});
    os << area.str() << "\n";

    const auto& metal = doc.at("metal");
    TextTable layers("metal layers: " + std::to_string(metal.at("n_metal").get<int>()),
                     {"layer", "l_start", "l_end", "routed (lambda)", "available (lambda)"});
    int index = 1;
    for (const auto& l : metal.at("layers"))
        layers.add({std::to_string(index++), fixed(l.at("l_start").get<double>(), 2),
                    fixed(l.at("l_end").get<double>(), 2), sci(l.at("routed_length").get<double>()),
                    sci(l.at("available_length").get<double>())});
    os << layers.str() << "\n";

    const auto& c = doc.at("cost");
    TextTable cost("cost (k_c lambda^2), " + c.at("mode").get<std::string>(), {"component", "value"});
    cost.add({"c_pd (k_c)", fixed(c.at("c_pd").get<double>(), 2)});
    cost.add({"c_pm (k_c)", fixed(c.at("c_pm").get<double>(), 2)});
    for (const char* key : {"die", "metal", "bonding", "cooling", "total"}) cost.add({key, sci(c.at(key).get<double>())});
    os << cost.str();
    return os.str();
}

std::string comparison_table(const Document& doc) {
    const auto& in = doc.at("inputs");
    const auto techs = in.at("technologies").get<std::vector<std::string>>();
    std::ostringstream os;
    os << "library " << in.at("library_version").get<std::string>() << ", cost mode "
       << in.at("mode").get<std::string>() << ", rent p " << in.at("rent").at("p").get<double>() << "\n\n";

    std::vector<std::string> header{"gates"};
    header.insert(header.end(), techs.begin(), techs.end());

    TextTable layers("metal layers", header);
    for (const auto& row : doc.at("metal_layers")) {
        std::vector<std::string> cells{gates_label(row.at("n_gates").get<double>())};
        for (const auto& t : techs) cells.push_back(std::to_string(row.at("values").at(t).get<int>()));
        layers.add(cells);
    }
    os << layers.str() << "\n";

    TextTable area("die area (lambda^2)", header);
    for (const auto& row : doc.at("die_area")) {
        std::vector<std::string> cells{gates_label(row.at("n_gates").get<double>())};
        for (const auto& t : techs) cells.push_back(sci(row.at("values").at(t).get<double>()));
        area.add(cells);
    }
    os << area.str() << "\n";

    TextTable stack("cost stack (k_c lambda^2), " + in.at("mode").get<std::string>(),
                    {"technology", "gates", "die", "metal", "bonding", "cooling", "total"});
    for (const auto& s : doc.at("cost_stack"))
        stack.add({s.at("technology").get<std::string>(), gates_label(s.at("n_gates").get<double>()),
                   sci(s.at("die").get<double>()), sci(s.at("metal").get<double>()),
                   sci(s.at("bonding").get<double>()), sci(s.at("cooling").get<double>()),
                   sci(s.at("total").get<double>())});
    os << stack.str() << "\n";

    std::vector<std::string> corner{"row \\ column"};
    corner.insert(corner.end(), techs.begin(), techs.end());
    for (const char* mode : {"paper-constants", "eq13"})
        for (const auto& r : doc.at("reductions").at(mode)) {
            TextTable red(std::string("cost reduction of row vs column (%), ") + mode + ", gates " +
                              gates_label(r.at("n_gates").get<double>()),
                          corner);
            for (const auto& row_t : techs) {
                std::vector<std::string> cells{row_t};
                for (const auto& col_t : techs) cells.push_back(fixed(r.at("percent").at(row_t).at(col_t).get<double>(), 1));
                red.add(cells);
            }
            os << red.str() << "\n";
        }

    TextTable process("unit-area process cost (k_c)",
                      {"technology", "c_pd steps", "c_pd published", "c_pm steps", "divergent"});
    for (const auto& p : doc.at("process_cost"))
        process.add({p.at("technology").get<std::string>(), fixed(p.at("c_pd_process_steps").get<double>(), 2),
                     p.at("c_pd_published").is_null() ? "-" : fixed(p.at("c_pd_published").get<double>(), 2),
                     fixed(p.at("c_pm_process_steps").get<double>(), 2), p.at("divergent").get<bool>() ? "yes" : "no"});
    os << process.str();
    return os.str();
}

std::string to_machine_text(const Document& doc) { return doc.dump(2) + "\n"; }

std::vector<DistributionSample> sample_distribution(const WirelengthDistribution& dist, int samples) {
    if (samples < 2) throw UsageError("sample count must be at least 2");
    if (dist.empty()) throw DomainError("distribution is empty for fewer than 4 gates");

    const double hi = dist.max_length();
    std::vector<double> ls;
    for (int i = 0; i < samples; ++i) ls.push_back(std::pow(hi, static_cast<double>(i) / (samples - 1)));
    ls.front() = 1.0;
    ls.back() = hi;
    ls.push_back(dist.region_boundary());
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

    std::vector<DistributionSample> rows;
    for (double l : ls)
        rows.push_back({l, dist.density(l), dist.cumulative_count(l), dist.cumulative_length(l)});
    return rows;
}

std::string distribution_csv(const std::vector<DistributionSample>& rows) {
    std::string out = "l_gate_pitches,i_per_gate_pitch,I_interconnects,L_gate_pitches\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r.l, r.density, r.count, r.length);
        out += buf;
    }
    return out;
}

std::string error_record(const std::string& kind, const std::string& message, int exit_code) {
    const nlohmann::ordered_json rec = {{"error", kind}, {"message", message}, {"exit_code", exit_code}};
    return rec.dump();
}

}  // namespace nwcost
