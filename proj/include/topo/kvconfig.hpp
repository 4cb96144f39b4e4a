#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "topo/errors.hpp"

namespace topo {

/// Flat "key = value" configuration file. '#' starts a comment, blank lines
/// are ignored, later assignments win. Parse and lookup errors name the
/// offending line or key.
class KeyValueConfig {
public:
    KeyValueConfig() = default;

    static KeyValueConfig parseFile(const std::filesystem::path& path);
    static KeyValueConfig parseString(const std::string& text,
                                      const std::string& origin = "config");

    bool has(const std::string& key) const;
    void set(const std::string& key, const std::string& value);

    std::string getString(const std::string& key, const std::string& fallback) const;
    double getDouble(const std::string& key, double fallback) const;
    int getInt(const std::string& key, int fallback) const;
    std::uint64_t getU64(const std::string& key, std::uint64_t fallback) const;
    bool getBool(const std::string& key, bool fallback) const;

    /// Comma-separated list value, trimmed entries.
    std::vector<std::string> getList(const std::string& key) const;

    std::vector<std::string> keys() const;

    /// Throws ParameterError naming the first key not in `allowed`.
    void requireKnownKeys(const std::vector<std::string>& allowed) const;

private:
    std::map<std::string, std::string> entries_;
    std::string origin_ = "config";
};

} // namespace topo
