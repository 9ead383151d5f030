#include "scwave/run_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scwave/errors.hpp"
#include "scwave/io.hpp"

namespace scwave {

void RunConfig::set(const std::string& key, double value) { entries[key] = format_double(value); }
void RunConfig::set(const std::string& key, int value) { entries[key] = std::to_string(value); }

std::optional<std::string> RunConfig::get(const std::string& key) const {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

std::string RunConfig::canonical() const {
    std::ostringstream os;
    os << "command=" << command << "\n";
    for (const auto& [key, value] : entries) os << key << "=" << value << "\n";
    return os.str();
}

RunConfig RunConfig::parse_canonical(const std::string& text) {
    RunConfig config;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("bad canonical config line: " + line);
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (first) {
            if (key != "command") throw ConfigError("canonical config must start with command=");
            config.command = value;
            first = false;
        } else {
            config.entries[key] = value;
        }
    }
    if (first) throw ConfigError("empty canonical config");
    return config;
}

void write_meta_sidecar(const std::string& out_path, const RunConfig& config) {
    nlohmann::ordered_json meta;
    meta["command"] = config.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : config.entries) params[key] = value;
    meta["parameters"] = params;
    meta["canonical"] = config.canonical();
    std::ofstream os(out_path + ".meta.json");
    if (!os) throw ConfigError("cannot write meta sidecar next to " + out_path);
    os << meta.dump(2) << "\n";
}

} // namespace scwave
