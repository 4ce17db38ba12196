#pragma once

#include <string>

#include <json.hpp>

namespace realpoincare {

/// Human-readable rendering of a command document (see pipeline.hpp).
std::string render_text(const nlohmann::json& doc);

}  // namespace realpoincare
