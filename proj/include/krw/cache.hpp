#pragma once

// Canonical-form result cache: JSON-lines files, one per operation tag.
// Append-only writes under an advisory lock; corrupt lines are skipped and
// recomputed; a version stamp invalidates entries from other engines.

#include "krw/rational.hpp"

#include <json.hpp>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace krw {

inline constexpr const char* kEngineVersion = "krw-1";

class ResultCache {
public:
    ResultCache() = default;
    explicit ResultCache(std::string dir) : dir_(std::move(dir)), enabled_(!dir_.empty()) {}

    static ResultCache from_environment(const std::string& flag_dir)
    {
        if (!flag_dir.empty())
            return ResultCache(flag_dir);
        const char* env = std::getenv("KRW_CACHE_DIR");
        return ResultCache(env ? std::string(env) : std::string());
    }

    bool enabled() const { return enabled_; }

    std::optional<std::string> lookup(const std::string& op, const std::string& key,
                                      const std::string& digest)
    {
        if (!enabled_)
            return std::nullopt;
        load(op);
        auto& table = loaded_[op];
        auto it = table.find(entry_key(key, digest));
        if (it == table.end())
            return std::nullopt;
        return it->second;
    }

    void store(const std::string& op, const std::string& key, const std::string& digest,
               const std::string& result)
    {
        if (!enabled_)
            return;
        load(op);
        auto ek = entry_key(key, digest);
        auto& table = loaded_[op];
        if (table.count(ek))
            return;
        table[ek] = result;
        nlohmann::json line{{"k", key},
                            {"op", op},
                            {"p", digest},
                            {"v", kEngineVersion},
                            {"r", nlohmann::json::parse(result, nullptr, false).is_discarded()
                                      ? nlohmann::json(result)
                                      : nlohmann::json::parse(result)}};
        append_line(op, line.dump());
    }

    // compute-through helper; cached and fresh results are byte-identical
    template <typename F>
    std::string cached(const std::string& op, const std::string& key, const std::string& params,
                       F&& compute)
    {
        std::string digest = fnv1a_hex(params);
        if (auto hit = lookup(op, key, digest))
            return *hit;
        std::string result = compute();
        store(op, key, digest, result);
        return result;
    }

private:
    static std::string entry_key(const std::string& key, const std::string& digest)
    {
        return key + "\x1f" + digest;
    }

    std::filesystem::path file_for(const std::string& op) const
    {
        return std::filesystem::path(dir_) / (op + ".jsonl");
    }

    void load(const std::string& op)
    {
        if (loaded_.count(op))
            return;
        auto& table = loaded_[op];
        std::ifstream in(file_for(op));
        std::string line;
        while (std::getline(in, line)) {
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("k") || !j.contains("p") || !j.contains("v") ||
                !j.contains("r"))
                continue; // corrupt line: recompute later
            if (j["v"].get<std::string>() != kEngineVersion)
                continue; // stale engine version
            std::string r = j["r"].is_string() ? j["r"].get<std::string>() : j["r"].dump();
            table[entry_key(j["k"].get<std::string>(), j["p"].get<std::string>())] = r;
        }
    }

    void append_line(const std::string& op, const std::string& line)
    {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        auto path = file_for(op);
        int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
        if (fd < 0) {
            warn_once();
            return;
        }
        ::flock(fd, LOCK_EX);
        std::string out = line + "\n";
        ssize_t unused = ::write(fd, out.data(), out.size());
        (void)unused;
        ::flock(fd, LOCK_UN);
        ::close(fd);
    }

    void warn_once()
    {
        if (!warned_) {
            std::cerr << "warning: cache dir '" << dir_ << "' not writable; computing through\n";
            warned_ = true;
        }
    }

    std::string dir_;
    bool enabled_ = false;
    bool warned_ = false;
    std::map<std::string, std::map<std::string, std::string>> loaded_;
};

} // namespace krw
