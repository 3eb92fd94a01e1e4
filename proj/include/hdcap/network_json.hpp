// JSON formats used by the CLI.
//
// Network file: exactly one of
//   {"relays": [{"ell": <num>, "r": <num>}, ...]}
//   {"gains":  [{"hs": <num>, "hd": <num>}, ...]}   (magnitudes, converted)
//
// Capacity result: {"value", "schedule" (state bitmask, as a decimal-string
// key, -> lambda serialized as a string), "tight_cuts", "support_size",
// "diagnostics"}.
#pragma once

#include <string>

#include <json.hpp>

#include "hdcap/capacity.hpp"
#include "hdcap/network.hpp"

namespace hdcap {

DiamondNetwork network_from_json(const nlohmann::json& j);
DiamondNetwork read_network_file(const std::string& path);

nlohmann::json network_to_json(const DiamondNetwork& net);
nlohmann::json normalized_to_json(const NormalizedNetwork& norm);

nlohmann::json capacity_result_to_json(const CapacityResult& result);

// Accepts either a bare {"<mask>": lambda} map or any object with a
// "schedule" key holding one (so a saved capacity result works directly).
// Lambda values may be numbers or decimal strings.
Schedule schedule_from_json(const nlohmann::json& j, int n);
Schedule read_schedule_file(const std::string& path, int n);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace hdcap
