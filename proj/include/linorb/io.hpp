#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linorb/configuration.hpp"
#include "linorb/series.hpp"

namespace linorb {

/// Parse a configuration from its JSON form. Two shapes are accepted:
///   {"lines": [{"coeffs": ["1","0","0"], "mult": 2}, ...]}
///   {"abstract": {"mults": [1,1,1,1], "bundles": [[0,1,2]]}}
/// Coefficients are exact rational strings (plain integers also accepted).
LineConfiguration parse_configuration(const nlohmann::json& j);

/// Parse a configuration from a file, wrapping syntax errors with the path.
LineConfiguration load_configuration(const std::string& path);

/// Exact serialization of a series: array of coefficient strings in lowest
/// terms, index = exponent.
nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// Everything the CLI prints for one configuration. Optional fields are
/// absent when they cannot be computed (e.g. component counts of abstract
/// stars) or were not requested (engine agreement without --verify).
/// Results for abstract inputs are labeled formal: they are functions of the
/// incidence data alone, with no claim that rational coordinates realize it.
struct Report {
    std::string classification;
    int orbit_dim = 0;
    bool formal = false;
    TruncatedSeries polynomial{TruncatedSeries::kPlaneCap};
    std::vector<Int> predegrees;
    std::optional<Int> components;
    std::optional<Int> orbit_degree;
    std::optional<bool> engine_agreement;

    friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_text(const Report& r);

}  // namespace linorb
