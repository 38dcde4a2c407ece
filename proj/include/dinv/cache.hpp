#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dinv {

// Line-oriented result cache: "version<TAB>key<TAB>value" per record,
// append-only. Records from other versions are ignored, corrupt lines are
// skipped with a warning, and an unusable file degrades to a no-op cache.
// Presence or absence of the cache never changes computed values, only
// whether they are recomputed.
class ResultCache {
public:
    ResultCache() = default; // disabled
    explicit ResultCache(std::string path);

    bool enabled() const noexcept { return enabled_; }

    std::optional<std::string> lookup(const std::string& key);
    void store(const std::string& key, const std::string& value);

    // Convenience: lookup, else compute and store.
    template <typename Fn>
    std::string remember(const std::string& key, Fn&& compute) {
        if (auto hit = lookup(key)) return *hit;
        std::string value = compute();
        store(key, value);
        return value;
    }

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    std::size_t hits() const noexcept { return hits_; }
    std::size_t stores() const noexcept { return stores_; }

private:
    bool enabled_ = false;
    std::string path_;
    std::map<std::string, std::string> records_;
    std::vector<std::string> warnings_;
    std::size_t hits_ = 0;
    std::size_t stores_ = 0;
    bool writable_ = true;
};

} // namespace dinv
