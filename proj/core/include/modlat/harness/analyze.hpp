#pragma once

#include <optional>
#include <string>

#include "modlat/harness/json_io.hpp"

namespace modlat::harness {

/// Ring profile plus the dimension profile of one module (the left regular
/// module when `module` is empty), with witnesses.
Json analyze(const RingSpec& ring, const std::optional<ModuleSpec>& module);

/// Human-readable rendering of an `analyze` result, one fact per line.
std::string render_text(const Json& analysis);

}  // namespace modlat::harness
