// JSON system configs for the command line tools.  A config plus a seed
// fully determines every output; unknown keys are rejected.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "listcode/listdec.hpp"
#include "listcode/system.hpp"

namespace listcode {

struct SystemConfig {
    CodeSystem system;
    std::string decoder;  // "scl" or "lva"
    ListConfig list{1, 1};
    std::uint64_t seed = 0;
};

// Throws parse_error with a descriptive message on any schema violation.
SystemConfig parse_system_config(const std::string& json_text);
SystemConfig load_system_config(const std::filesystem::path& file);

// Bundled configurations: the two optimized designs plus the six standard
// CRC variants of the (512, 32+m) polar code.
std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
std::string preset_config_json(const std::string& name);
SystemConfig preset_config(const std::string& name);

} // namespace listcode
