#pragma once

#include "kfan/kring.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace kfan::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_invalid_fan = 2,
    exit_parse = 3,
    exit_not_finite = 4,
    exit_verification = 5,
};

/// Runs the kfan command line; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The structured verification report (pretty-printed JSON, trailing newline).
std::string report_json(const KPresentation& pres, const VerificationReport& report);

/// Parses "basis", "default" or "box=<k>" with k >= 1.
JStrategy parse_strategy(const std::string& text);

} // namespace kfan::cli
