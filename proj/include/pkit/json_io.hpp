#pragma once

#include <string>

#include <json.hpp>

#include "pkit/arrows.hpp"
#include "pkit/blocks.hpp"
#include "pkit/grothendieck.hpp"
#include "pkit/translation.hpp"
#include "pkit/weights.hpp"

namespace pkit {

nlohmann::json to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GVector& v);
GVector gvector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ArrowDiagram& a);
nlohmann::json to_json(const WedgeVector& w);
nlohmann::json to_json(const BlockLabel& b);
nlohmann::json to_json(const std::vector<Component>& comps);

std::string to_text(const GVector& v);
std::string to_text(const WedgeVector& w);

}  // namespace pkit
