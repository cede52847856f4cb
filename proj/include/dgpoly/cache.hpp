#pragma once

#include "dgpoly/serialize.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace dgpoly {

std::string sha256_hex(std::string_view data);

/// On-disk store of JSON results: <dir>/<key>.json plus <dir>/index.json.
/// Writes go to a temporary file that is renamed into place.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    /// Hash of the schema version and the canonical request document.
    static std::string key(const Json& request);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(const std::string& key) const;

    /// Cached payload, or nullopt on a miss. Unreadable or mismatched entries
    /// are reported on `warn` and treated as misses.
    std::optional<Json> load(const std::string& key, std::ostream& warn) const;
    void store(const std::string& key, const Json& request, const Json& payload, std::ostream& warn) const;

private:
    std::filesystem::path dir_;
};

}  // namespace dgpoly
