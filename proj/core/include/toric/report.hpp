#pragma once

#include <string>
#include <string_view>

#include "toric/variety.hpp"

namespace toric {

/// JSON object with a stable field order. Round-trips through
/// analysis_report_from_json.
std::string to_json(const AnalysisReport& r, int indent = 2);

/// Throws std::invalid_argument on a malformed document.
AnalysisReport analysis_report_from_json(std::string_view text);

/// Human-readable table; not a stable format.
std::string to_text(const AnalysisReport& r);

}  // namespace toric
