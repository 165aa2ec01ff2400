#pragma once

#include <map>
#include <string>
#include <string_view>

#include "nwcost/rent.hpp"
#include "nwcost/technology.hpp"

namespace nwcost {

inline constexpr int kLibrarySchemaVersion = 1;

/// Technology profiles plus the Rent parameters shared by every projection.
struct TechnologyLibrary {
    std::map<std::string, TechnologyProfile> profiles;
    RentParameters rent;
    std::string library_version;

    /// ConfigError for unknown names.
    const TechnologyProfile& profile(std::string_view name) const;

    void validate() const;

    bool operator==(const TechnologyLibrary&) const = default;
};

/// Built-in library with calibrated stack and cost knobs committed.
TechnologyLibrary builtin_library();

/// Same profiles before calibration: p = 0.6, uniform mu = 0.4 on the 8 lambda
/// tiered stack, no bonding or cooling.
TechnologyLibrary uncalibrated_library();

struct LoadOptions {
    /// Reject fields the schema does not know.
    bool strict = true;
};

/// `source` is "builtin", "builtin:uncalibrated" or a file path.
TechnologyLibrary load_library(std::string_view source, LoadOptions options = {});

/// Parse a library document. Missing profile fields default to the built-in
/// profile of the same name, or to generic defaults for new names.
TechnologyLibrary parse_library(std::string_view text, LoadOptions options = {});

std::string library_to_text(const TechnologyLibrary& library);

/// Library source to use when none is given: $NWCOST_LIBRARY or "builtin".
std::string default_library_source();

}  // namespace nwcost
