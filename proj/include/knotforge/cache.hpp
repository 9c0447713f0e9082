#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace knotforge {

inline constexpr const char* kToolVersion = "0.1.0";

std::string sha256_hex(const std::string& data);

// Content-addressed invariant cache. Keys combine the canonicalized knot
// file with the tool version; entries are whole invariant reports. Writes go
// through a temp file and rename.
class InvariantCache {
public:
    // Directory from KNOTFORGE_CACHE, else the user cache dir; empty disables.
    static InvariantCache from_environment(bool enabled = true);
    explicit InvariantCache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }
    const std::string& dir() const { return dir_; }

    static std::string key_for(const nlohmann::json& canonical_knot);

    std::optional<nlohmann::json> lookup(const std::string& key) const;
    void store(const std::string& key, const nlohmann::json& report) const;

private:
    std::string dir_;
};

}  // namespace knotforge
