#pragma once

#include <map>
#include <optional>
#include <string>

namespace scwave {

// Canonical key=value record of a CLI invocation.  The canonical text form
// round-trips: parse(canonical()) == *this.  It is also what the meta
// sidecar embeds so runs stay reproducible from their outputs.
struct RunConfig {
    std::string command;
    std::map<std::string, std::string> entries; // sorted by construction

    void set(const std::string& key, const std::string& value) { entries[key] = value; }
    void set(const std::string& key, double value);
    void set(const std::string& key, int value);
    std::optional<std::string> get(const std::string& key) const;

    std::string canonical() const;
    static RunConfig parse_canonical(const std::string& text);

    bool operator==(const RunConfig& other) const = default;
};

// Writes "<path>.meta.json" with the canonical config and tool version.
void write_meta_sidecar(const std::string& out_path, const RunConfig& config);

} // namespace scwave
