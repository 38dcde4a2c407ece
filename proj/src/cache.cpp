#include "dinv/cache.hpp"

#include "dinv/errors.hpp"
#include "dinv/version.hpp"

#include <fstream>

namespace dinv {

namespace {

bool clean_field(const std::string& s) {
    return s.find('\t') == std::string::npos && s.find('\n') == std::string::npos;
}

} // namespace

ResultCache::ResultCache(std::string path) : enabled_(true), path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return; // nothing cached yet; the file appears on first store
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto t1 = line.find('\t');
        auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
            warnings_.push_back("skipped corrupt cache line " + std::to_string(lineno));
            continue;
        }
        std::string version = line.substr(0, t1);
        if (version != version_tag) continue; // stale record, not corrupt
        records_[line.substr(t1 + 1, t2 - t1 - 1)] = line.substr(t2 + 1);
    }
}

std::optional<std::string> ResultCache::lookup(const std::string& key) {
    if (!enabled_) return std::nullopt;
    auto it = records_.find(key);
    if (it == records_.end()) return std::nullopt;
    ++hits_;
    return it->second;
}

void ResultCache::store(const std::string& key, const std::string& value) {
    if (!enabled_) return;
    if (!clean_field(key) || !clean_field(value))
        throw InternalError("cache fields must not contain tabs or newlines");
    records_[key] = value;
    if (!writable_) return;
    std::ofstream out(path_, std::ios::app);
    if (!out || !(out << version_tag << '\t' << key << '\t' << value << '\n')) {
        writable_ = false;
        warnings_.push_back("cache file '" + path_ + "' is not writable; continuing uncached");
        return;
    }
    out.flush();
    ++stores_;
}

} // namespace dinv
