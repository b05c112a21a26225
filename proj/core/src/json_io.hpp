#pragma once

// Shared nlohmann::json conversions for the core's JSON emitters. Private to the library.

#include <json.hpp>

#include "arclab/numeric.hpp"
#include "arclab/sets.hpp"

namespace arclab::detail {

using nlohmann::json;

json record_to_json(const PointSetRecord& record);
PointSetRecord record_from_json_value(const json& value);

inline json rational_json(const Rational& r)
{
    return to_string(r);
}

}  // namespace arclab::detail
