#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include <json.hpp>

#include "denv/solver.hpp"

namespace denv {

inline constexpr const char* kVersion = "0.1.0";

struct ReportOptions {
    std::string input;
    Field field;
    std::map<std::string, double> timings_ms;  // empty unless requested
};

nlohmann::ordered_json report_json(const ClassificationReport& rep, const ReportOptions& opt);
std::string report_text(const ClassificationReport& rep, const ReportOptions& opt);

/// Exit codes: 0 success, 2 parse error, 3 bad parameters or caps.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace denv
