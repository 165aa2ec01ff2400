#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nwcost/cost.hpp"
#include "nwcost/projection.hpp"
#include "nwcost/techlib.hpp"

namespace nwcost {

using Document = nlohmann::ordered_json;

inline constexpr const char* kProjectionSchema = "nwcost.projection/1";
inline constexpr const char* kComparisonSchema = "nwcost.comparison/1";

/// Canonical technology order used when none is requested.
std::vector<std::string> default_technologies();
std::vector<double> default_gate_counts();

/// Self-describing record of one projection: inputs echo plus every
/// intermediate needed to recompute the numbers.
Document projection_document(const Projection& projection, const std::string& library_version, CostMode mode);

struct ComparisonRequest {
    std::vector<std::string> technologies;
    std::vector<double> gate_counts;
    CostMode mode = CostMode::PaperConstants;
};

/// UsageError for fewer than two technologies or an empty gate list.
Document comparison_document(const TechnologyLibrary& library, const ComparisonRequest& request);

/// Human tables rendered from a document produced above.
std::string projection_table(const Document& doc);
std::string comparison_table(const Document& doc);

/// Serialization shared by every machine-readable output.
std::string to_machine_text(const Document& doc);

struct DistributionSample {
    double l = 0.0;
    double density = 0.0;
    double count = 0.0;   // interconnects of length in [1, l]
    double length = 0.0;  // total wirelength of those, gate pitches
};

/// `samples` log-uniform points over [1, 2 sqrt(N)] plus sqrt(N); the first
/// point is 1 and the last is 2 sqrt(N). UsageError if samples < 2.
std::vector<DistributionSample> sample_distribution(const WirelengthDistribution& dist, int samples);

/// Comma-separated curve with a unit-bearing header and %.17g numbers.
std::string distribution_csv(const std::vector<DistributionSample>& rows);

/// Single-line JSON error record for stderr.
std::string error_record(const std::string& kind, const std::string& message, int exit_code);

}  // namespace nwcost
