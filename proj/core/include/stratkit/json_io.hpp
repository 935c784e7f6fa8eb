#pragma once

#include <nlohmann/json.hpp>

#include "stratkit/map_analysis.hpp"
#include "stratkit/thom.hpp"

namespace stratkit {

// ordered_json keeps insertion order, so reports are byte-stable.
using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Ideal& I);
ordered_json to_json(const CSet& c);
ordered_json to_json(const PolyMap& F);
ordered_json to_json(const LeadingFormData& d);
ordered_json to_json(const MapReport& r);
ordered_json to_json(const TransversalityReport& r);
ordered_json to_json(const Stratification& s);

/// FNV-1a hash of the input text, as a stable hex digest for reports.
std::string text_digest(const std::string& text);

}  // namespace stratkit
