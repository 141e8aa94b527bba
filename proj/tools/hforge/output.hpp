#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hforge/report.hpp"

namespace hforge::cli {

using Json = nlohmann::ordered_json;

Json row_json(const ReportRow& row, bool timing);
Json summary_json(const Summary& s);
/// {tool_version, config, rows, summary}
Json report_json(const Report& report, Json config, bool timing);

std::string report_csv(const Report& report, bool timing);
/// Per-identity group lines plus one line per failing row, then the summary.
/// With strict set, expected failures also mark their group FAIL.
std::string report_text(const Report& report, bool strict = false);

/// "ID-14[m=3,printed]"
std::string row_label(const ReportRow& row);

}  // namespace hforge::cli
