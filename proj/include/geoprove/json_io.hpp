// JSON forms of the public objects; schemas documented in docs/.
#pragma once

#include <json.hpp>

#include "geoprove/discovery.hpp"
#include "geoprove/transcript.hpp"

namespace geoprove {

nlohmann::json to_json(const PolySystem& sys);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const Transcript& t);
nlohmann::json to_json(const DiscoveryReport& report);

std::string mode_tag(TruthMode mode);  // "formally_true", ...

}  // namespace geoprove
