#ifndef PMRAMSEY_APP_CACHE_HH
#define PMRAMSEY_APP_CACHE_HH

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace pmramsey::app {

struct CacheEntry
{
    std::string key; ///< "PM:5,5,5", "1C:5,5,5" or "C:9/5"
    int value = 0;
    std::string method;
    std::string created; ///< UTC, ISO 8601

    auto operator==(const CacheEntry &) const -> bool = default;
};

/// One JSON document of entries. Writes go to a temporary file that then
/// replaces the original, so a crash never leaves a torn cache.
class ResultCache
{
public:
    explicit ResultCache(std::filesystem::path path);

    /// Reads the file if it exists; throws InvalidInput if it is not a cache.
    void load();
    void save() const;

    auto find(const std::string &key) const -> std::optional<CacheEntry>;
    /// Stamps `created` when it is empty.
    void put(CacheEntry entry);
    auto entries() const -> const std::map<std::string, CacheEntry> & { return _entries; }
    auto path() const -> const std::filesystem::path & { return _path; }

private:
    std::filesystem::path _path;
    std::map<std::string, CacheEntry> _entries;
};

/// $RAMSEY_PM_CACHE, else $XDG_CACHE_HOME/pmramsey/cache.json, else ~/.cache/pmramsey/cache.json.
auto default_cache_path() -> std::filesystem::path;

auto pm_key(const std::string &targets_key) -> std::string;
auto core_key(const std::string &targets_key) -> std::string;
auto covering_key(int v, int k) -> std::string;

} // namespace pmramsey::app

#endif
