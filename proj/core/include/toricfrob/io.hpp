#pragma once

// Fan files: {"dim": d, "rays": [[...]], "max_cones": [[...]], "name": "..."}
// with 0-based ray indices.

#include <string>
#include <vector>

#include "toricfrob/fan.hpp"

namespace toricfrob {

/// Throws ParseError (with line or field) or ValidationError. Rays that are
/// not primitive are rescaled and reported through `warnings`.
Fan parse_fan(const std::string& text, std::vector<std::string>* warnings = nullptr);

Fan read_fan_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

std::string serialize_fan(const Fan& fan);

}  // namespace toricfrob
