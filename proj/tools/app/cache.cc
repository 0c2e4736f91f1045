#include "app/cache.hh"

#include <pmramsey/errors.hh>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

using nlohmann::json;
using namespace pmramsey::app;

ResultCache::ResultCache(std::filesystem::path path) :
    _path(std::move(path))
{
}

void ResultCache::load()
{
    _entries.clear();
    std::ifstream in(_path);
    if (! in)
        return;
    try {
        auto doc = json::parse(in);
        for (auto &e : doc.at("entries")) {
            CacheEntry entry{e.at("key").get<std::string>(), e.at("value").get<int>(),
                e.at("method").get<std::string>(), e.at("created").get<std::string>()};
            if (entry.value < 2)
                throw InvalidInput("cache entry " + entry.key + " has value below 2");
            _entries[entry.key] = entry;
        }
    }
    catch (const json::exception &e) {
        throw InvalidInput("unreadable cache " + _path.string() + ": " + e.what());
    }
}

void ResultCache::save() const
{
    json entries = json::array();
    for (auto &[key, e] : _entries)
        entries.push_back({{"key", e.key}, {"value", e.value}, {"method", e.method}, {"created", e.created}});
    json doc = {{"version", 1}, {"entries", std::move(entries)}};

    if (_path.has_parent_path())
        std::filesystem::create_directories(_path.parent_path());
    auto tmp = _path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << doc.dump(2) << '\n';
        if (! out)
            throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, _path);
}

auto ResultCache::find(const std::string &key) const -> std::optional<CacheEntry>
{
    auto it = _entries.find(key);
    if (it == _entries.end())
        return std::nullopt;
    return it->second;
}

void ResultCache::put(CacheEntry entry)
{
    if (entry.created.empty()) {
        auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        entry.created = buf;
    }
    _entries[entry.key] = std::move(entry);
}

auto pmramsey::app::default_cache_path() -> std::filesystem::path
{
    if (auto env = std::getenv("RAMSEY_PM_CACHE"); env && *env)
        return env;
    if (auto xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "pmramsey" / "cache.json";
    if (auto home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "pmramsey" / "cache.json";
    return "pmramsey-cache.json";
}

auto pmramsey::app::pm_key(const std::string &targets_key) -> std::string
{
    return "PM:" + targets_key;
}

auto pmramsey::app::core_key(const std::string &targets_key) -> std::string
{
    return "1C:" + targets_key;
}

auto pmramsey::app::covering_key(int v, int k) -> std::string
{
    return "C:" + std::to_string(v) + "/" + std::to_string(k);
}
