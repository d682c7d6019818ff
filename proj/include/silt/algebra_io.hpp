#pragma once

#include <string>

#include <json.hpp>

#include "silt/algebra.hpp"

namespace silt {

/// {"field": {"p": int}, "quiver": {"vertices": [...], "arrows": [[label, src, tgt], ...]},
///  "relations": [[[coeff, [arrow labels...]], ...], ...], "nilpotency_bound": int}
AlgebraPresentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const AlgebraPresentation& p);

AlgebraPresentation read_presentation_file(const std::string& path);

} // namespace silt
