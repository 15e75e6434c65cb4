#include "cache.hpp"

#include <boost/crc.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unistd.h>

namespace confspace::cli {

std::uint32_t checksum(const std::string& text) {
    boost::crc_32_type crc;
    crc.process_bytes(text.data(), text.size());
    return crc.checksum();
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    std::ostringstream name;
    name << key.substr(0, key.find('|')) << "-" << std::hex << std::setw(8) << std::setfill('0')
         << checksum(key) << ".json";
    return dir_ / name.str();
}

std::optional<Json> ResultCache::load(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in)
        return std::nullopt;
    try {
        const Json entry = Json::parse(in);
        if (entry.at("key").get<std::string>() != key)
            return std::nullopt;
        const Json& payload = entry.at("payload");
        if (entry.at("checksum").get<std::uint32_t>() != checksum(payload.dump()))
            return std::nullopt;
        return payload;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store(const std::string& key, const Json& payload) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        return;
    const Json entry = {{"key", key}, {"checksum", checksum(payload.dump())}, {"payload", payload}};
    const auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            return;
        out << entry.dump() << "\n";
        if (!out)
            return;
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec)
        std::filesystem::remove(tmp, ec);
}

} // namespace confspace::cli
