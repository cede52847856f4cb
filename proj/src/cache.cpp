#include "dgpoly/cache.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace dgpoly {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

namespace {

void atomic_write(const fs::path& target, const std::string& text) {
    std::random_device rd;
    const fs::path tmp = target.parent_path() / (".tmp-" + target.filename().string() + "-" +
                                                 std::to_string(::getpid()) + "-" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::optional<std::string> read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json rebuild_index(const fs::path& dir) {
    Json index{{"schema_version", kSchemaVersion}, {"entries", Json::object()}};
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() == ".json" && e.path().stem().string().size() == 64) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        auto text = read_file(f);
        if (!text) continue;
        Json entry = Json::parse(*text, nullptr, false);
        if (entry.is_discarded() || !entry.is_object() || entry.value("key", "") != f.stem().string()) continue;
        index["entries"][f.stem().string()] = {{"command", entry["request"].value("command", "")},
                                               {"file", f.filename().string()}};
    }
    return index;
}

}  // namespace

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::string ResultCache::key(const Json& request) {
    return sha256_hex("dgpoly-cache/" + std::to_string(kSchemaVersion) + "\n" + request.dump());
}

fs::path ResultCache::entry_path(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<Json> ResultCache::load(const std::string& key, std::ostream& warn) const {
    const auto text = read_file(entry_path(key));
    if (!text) return std::nullopt;
    Json entry = Json::parse(*text, nullptr, false);
    if (entry.is_discarded() || !entry.is_object() || entry.value("key", "") != key ||
        entry.value("schema_version", -1) != kSchemaVersion || !entry.contains("payload")) {
        warn << "warning: corrupt cache entry " << entry_path(key).string() << ", recomputing\n";
        return std::nullopt;
    }
    return entry["payload"];
}

void ResultCache::store(const std::string& key, const Json& request, const Json& payload, std::ostream& warn) const {
    Json entry{{"key", key}, {"schema_version", kSchemaVersion}, {"request", request}, {"payload", payload}};
    atomic_write(entry_path(key), entry.dump(2) + "\n");

    const fs::path index_path = dir_ / "index.json";
    Json index;
    if (auto text = read_file(index_path)) {
        index = Json::parse(*text, nullptr, false);
        if (index.is_discarded() || !index.is_object() || !index.contains("entries") ||
            !index["entries"].is_object()) {
            warn << "warning: corrupt cache index " << index_path.string() << ", rebuilding\n";
            index = rebuild_index(dir_);
        }
    }
    if (index.is_null()) index = Json{{"schema_version", kSchemaVersion}, {"entries", Json::object()}};
    index["entries"][key] = {{"command", request.value("command", "")}, {"file", key + ".json"}};
    atomic_write(index_path, index.dump(2) + "\n");
}

}  // namespace dgpoly
