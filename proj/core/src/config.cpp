#include "listcode/config.hpp"

#include <fstream>
#include <map>

#include <json.hpp>

namespace listcode {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const char* where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw parse_error(std::string("config: unknown key '") + key + "' in " + where);
    }
}

template <typename T>
T require(const json& obj, const char* where, const char* key) {
    if (!obj.contains(key))
        throw parse_error(std::string("config: missing '") + key + "' in " + where);
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw parse_error(std::string("config: bad type for '") + key + "' in " + where);
    }
}

} // namespace

SystemConfig parse_system_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("config: top level must be an object");
    reject_unknown_keys(j, "config",
                        {"code", "message_length", "crc", "tbcc", "polar", "decoder", "list",
                         "seed", "name"});

    SystemConfig cfg;
    const std::string code = require<std::string>(j, "config", "code");
    if (code != "tbcc" && code != "polar")
        throw parse_error("config: 'code' must be \"tbcc\" or \"polar\"");

    const auto message_length = require<std::size_t>(j, "config", "message_length");
    if (message_length == 0) throw parse_error("config: message_length must be positive");

    const json& jcrc = j.contains("crc") ? j.at("crc")
                                         : throw parse_error("config: missing 'crc'");
    reject_unknown_keys(jcrc, "crc", {"hex", "width"});
    const auto crc_hex = require<std::string>(jcrc, "crc", "hex");
    const auto crc_width = require<unsigned>(jcrc, "crc", "width");
    CrcPoly crc = parse_hex_poly(crc_hex, crc_width);

    std::string name = j.value("name", "");

    if (code == "tbcc") {
        if (!j.contains("tbcc")) throw parse_error("config: tbcc code needs a 'tbcc' section");
        if (j.contains("polar")) throw parse_error("config: tbcc code cannot have a 'polar' section");
        const json& jt = j.at("tbcc");
        reject_unknown_keys(jt, "tbcc", {"memory", "taps_octal", "puncture"});
        const auto memory = require<unsigned>(jt, "tbcc", "memory");
        const auto taps = require<std::vector<std::string>>(jt, "tbcc", "taps_octal");
        std::vector<std::size_t> puncture;
        if (jt.contains("puncture")) {
            try {
                puncture = jt.at("puncture").get<std::vector<std::size_t>>();
            } catch (const json::exception&) {
                throw parse_error("config: bad type for 'puncture' in tbcc");
            }
        }
        cfg.system = make_tbcc_system(message_length, crc, ConvCodeSpec::from_octal(memory, taps),
                                      std::move(puncture), name);
    } else {
        if (!j.contains("polar")) throw parse_error("config: polar code needs a 'polar' section");
        if (j.contains("tbcc")) throw parse_error("config: polar code cannot have a 'tbcc' section");
        const json& jp = j.at("polar");
        reject_unknown_keys(jp, "polar", {"N", "sequence_file"});
        const auto N = require<std::size_t>(jp, "polar", "N");
        if (jp.contains("sequence_file")) {
            const auto file = require<std::string>(jp, "polar", "sequence_file");
            const ReliabilitySequence seq = load_reliability_sequence(file);
            cfg.system = make_polar_system(message_length, crc, seq, N, name);
        } else {
            cfg.system = make_polar_system(message_length, crc, reliability_sequence_5g(), N, name);
        }
    }
    if (cfg.system.name.empty())
        cfg.system.name = code + "_" + std::to_string(cfg.system.block_length()) + "_" +
                          std::to_string(cfg.system.data_length()) + "_crc" + crc.to_hex();

    cfg.decoder = j.value("decoder", code == "polar" ? "scl" : "lva");
    if (cfg.decoder != "scl" && cfg.decoder != "lva")
        throw parse_error("config: 'decoder' must be \"scl\" or \"lva\"");
    if ((cfg.decoder == "scl") != (code == "polar"))
        throw parse_error("config: decoder \"" + cfg.decoder + "\" does not match code \"" + code + "\"");

    if (j.contains("list")) {
        const json& jl = j.at("list");
        reject_unknown_keys(jl, "list", {"min", "max"});
        cfg.list.L_min = require<unsigned>(jl, "list", "min");
        cfg.list.L_max = require<unsigned>(jl, "list", "max");
        if (!is_power_of_two(cfg.list.L_min) || !is_power_of_two(cfg.list.L_max) ||
            cfg.list.L_min > cfg.list.L_max)
            throw parse_error("config: list min/max must be powers of two with min <= max");
    }
    cfg.seed = j.value("seed", std::uint64_t{0});
    return cfg;
}

SystemConfig load_system_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw parse_error("cannot open config file: " + file.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_system_config(text);
}

namespace {

const std::map<std::string, std::string>& preset_table() {
    static const std::map<std::string, std::string> presets = [] {
        std::map<std::string, std::string> m;
        m["tbcc_512_43_crc0xF69"] = R"({
  "name": "tbcc_512_43_crc0xF69",
  "code": "tbcc",
  "message_length": 32,
  "crc": {"hex": "0xF69", "width": 11},
  "tbcc": {
    "memory": 8,
    "taps_octal": ["533","727","765","445","715","635","563","555","737","557","677","511"],
    "puncture": [47, 60, 129, 504]
  },
  "decoder": "lva",
  "list": {"min": 1, "max": 1024}
})";
        m["polar_5g_512_43_crc0xD41"] = R"({
  "name": "polar_5g_512_43_crc0xD41",
  "code": "polar",
  "message_length": 32,
  "crc": {"hex": "0xD41", "width": 11},
  "polar": {"N": 512},
  "decoder": "scl",
  "list": {"min": 32, "max": 1024}
})";
        auto polar_5g = [](const char* label, const char* hex, unsigned width) {
            std::string s = R"({
  "name": "polar_5g_512_crc)";
            s += label;
            s += R"(",
  "code": "polar",
  "message_length": 32,
  "crc": {"hex": ")";
            s += hex;
            s += R"(", "width": )" + std::to_string(width) + R"(},
  "polar": {"N": 512},
  "decoder": "scl",
  "list": {"min": 32, "max": 1024}
})";
            return s;
        };
        m["polar_5g_512_crc24a"] = polar_5g("24a", "0x1864CFB", 24);
        m["polar_5g_512_crc24b"] = polar_5g("24b", "0x1800063", 24);
        m["polar_5g_512_crc24c"] = polar_5g("24c", "0x1B2B117", 24);
        m["polar_5g_512_crc16"] = polar_5g("16", "0x11021", 16);
        m["polar_5g_512_crc11"] = polar_5g("11", "0xE21", 11);
        m["polar_5g_512_crc6"] = polar_5g("6", "0x61", 6);
        return m;
    }();
    return presets;
}

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : preset_table()) names.push_back(k);
    return names;
}

bool is_preset(const std::string& name) { return preset_table().count(name) > 0; }

std::string preset_config_json(const std::string& name) {
    auto it = preset_table().find(name);
    if (it == preset_table().end()) throw parameter_error("unknown preset: " + name);
    return it->second;
}

SystemConfig preset_config(const std::string& name) {
    return parse_system_config(preset_config_json(name));
}

} // namespace listcode
