#pragma once

// JSON fan documents: {"rank": n, "rays": [[...], ...], "maximal_cones":
// [[i, j, ...], ...], "name": "..."} with 0-based ray indices. Cones are
// closed under faces on load.

#include "kfan/fan.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kfan::cli {

/// Malformed document. The message names the line/column or the field.
class FanParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Fan parse_fan_document(std::string_view text);
std::string serialize_fan(const Fan& fan);

/// builtin:p1 .. p3, a2, a3, p1xp1, hirzebruch:<a>, blowup-p2 (name without
/// the "builtin:" prefix). Throws FanParseError for unknown names.
Fan builtin_fan(std::string_view name);
std::vector<std::string> builtin_names();

/// A "builtin:..." reference or a path to a JSON document.
Fan load_fan(const std::string& source);

} // namespace kfan::cli
