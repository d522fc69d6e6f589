#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "modlat/dimension.hpp"
#include "modlat/harness/module_spec.hpp"
#include "modlat/ring.hpp"
#include "modlat/ringclass.hpp"

namespace modlat::harness {

using Json = nlohmann::json;

/// Throws InvalidInput "<origin>:<line>:<column>: <message>" on malformed text.
Json parse_json(std::string_view text, const std::string& origin);
Json read_json_file(const std::filesystem::path& path);

/// Ring schema:
///   {"kind":"cyclic","n":12}
///   {"kind":"matrix","base":<ring>,"size":2}
///   {"kind":"triangular","base":<ring>,"size":2}
///   {"kind":"product","factors":[<ring>,...]}
///   {"kind":"tables","add":[[...]],"mul":[[...]],"one":i}
/// Errors name the offending JSON pointer.
RingSpec ring_spec_from_json(const Json& j);
Json to_json(const RingSpec& spec);

/// Module schema:
///   {"kind":"regular","side":"left"|"right"}          side defaults to left
///   {"kind":"quotient","of":<module>,"by":[i,...]}
///   {"kind":"direct_sum","parts":[<module>,...],"side":...}
ModuleSpec module_spec_from_json(const Json& j);
Json to_json(const ModuleSpec& spec);

/// Sorted member list.
Json to_json(const Submodule& n);
Json to_json(const DimensionProfile& p);
Json to_json(const RingProfile& p);

std::string members_string(const Submodule& n);

}  // namespace modlat::harness
