#include "hdcap/network_json.hpp"

#include <fstream>
#include <stdexcept>

namespace hdcap {

using nlohmann::json;

DiamondNetwork network_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("network JSON must be an object");
    const bool has_relays = j.contains("relays");
    const bool has_gains = j.contains("gains");
    if (has_relays == has_gains) {
        throw std::invalid_argument("network JSON needs exactly one of \"relays\" or \"gains\"");
    }
    DiamondNetwork net;
    if (has_relays) {
        for (const auto& item : j.at("relays")) {
            net.relays.push_back({item.at("ell").get<double>(), item.at("r").get<double>()});
        }
    } else {
        for (const auto& item : j.at("gains")) {
            net.relays.push_back(
                links_from_gains(item.at("hs").get<double>(), item.at("hd").get<double>()));
        }
    }
    require_valid(net);
    return net;
}

DiamondNetwork read_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open network file '" + path + "'");
    json j;
    in >> j;
    return network_from_json(j);
}

json network_to_json(const DiamondNetwork& net) {
    json relays = json::array();
    for (const auto& rl : net.relays) {
        relays.push_back({{"ell", rl.ell}, {"r", rl.r}});
    }
    return json{{"relays", relays}};
}

json normalized_to_json(const NormalizedNetwork& norm) {
    json j = network_to_json(norm.network);
    j["z"] = norm.z;
    return j;
}

json capacity_result_to_json(const CapacityResult& result) {
    json sched = json::object();
    for (const auto& [state, w] : result.schedule.weights) {
        // shortest round-trip decimal string for the weight
        sched[std::to_string(state)] = json(w).dump();
    }
    json diag{{"pivots", result.diag.pivots},
              {"certificate_ok", result.diag.certificate_ok},
              {"mode", result.diag.exact ? "exact" : "float64"}};
    if (!result.diag.certificate_violations.empty()) {
        diag["certificate_violations"] = result.diag.certificate_violations;
    }
    if (result.diag.exact) diag["value_exact"] = result.diag.exact_value;
    return json{{"value", result.value},
                {"n", result.schedule.n},
                {"schedule", sched},
                {"tight_cuts", result.tight_cuts},
                {"support_size", result.support_size},
                {"diagnostics", diag}};
}

Schedule schedule_from_json(const json& j, int n) {
    const json* map = &j;
    if (j.is_object() && j.contains("schedule")) map = &j.at("schedule");
    if (!map->is_object()) throw std::invalid_argument("schedule JSON must be an object");
    Schedule sched;
    sched.n = n;
    for (const auto& [key, value] : map->items()) {
        StateMask state = 0;
        try {
            state = static_cast<StateMask>(std::stoul(key));
        } catch (const std::exception&) {
            throw std::invalid_argument("schedule key '" + key + "' is not a state bitmask");
        }
        double w = value.is_string() ? std::stod(value.get<std::string>()) : value.get<double>();
        sched.weights[state] += w;
    }
    return sched;
}

Schedule read_schedule_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schedule file '" + path + "'");
    json j;
    in >> j;
    return schedule_from_json(j, n);
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << contents;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace hdcap
