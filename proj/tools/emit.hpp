#pragma once

#include <string>

#include "arq/artheory.hpp"
#include "json.hpp"

namespace arq::io {

using ojson = nlohmann::ordered_json;

ojson quiver_json(const ARQuiver& q);
// inverse of quiver_json; ids are renumbered by position
ARQuiver quiver_from_json(const ojson& j);

std::string emit_json(const ARQuiver& q);
std::string emit_dot(const ARQuiver& q, const std::string& graph_name = "ar");
std::string emit_text(const ARQuiver& q);

std::string flag_string(const NodeFlags& f);

}  // namespace arq::io
