#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "confspace/serialize.hpp"

namespace confspace::cli {

/// One file per key. Entries carry the key and a CRC-32 of the payload; a
/// mismatch of either is treated as a miss.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::optional<Json> load(const std::string& key) const;
    /// Write to a temporary file, then rename over the final name.
    void store(const std::string& key, const Json& payload) const;
    std::filesystem::path path_for(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

std::uint32_t checksum(const std::string& text);

} // namespace confspace::cli
