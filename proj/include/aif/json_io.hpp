#pragma once

// Family JSON: {"n": N, "k": K, "sets": [[1,2,3], ...]} with 1-based,
// strictly increasing members of length k.

#include <string>
#include <string_view>

#include <json.hpp>

#include "aif/bounds.hpp"
#include "aif/family.hpp"

namespace aif {

SetFamily family_from_json(const nlohmann::json& j);
/// Throws ParseError on malformed text or any invalid member.
SetFamily parse_family(std::string_view text);

nlohmann::json set_to_json(Mask m);
nlohmann::json family_to_json(const SetFamily& f);

/// A JSON number when the value fits in int64, a decimal string otherwise.
nlohmann::json big_to_json(const BigCount& v);

}  // namespace aif
