#pragma once

// Persistent store of exact invariant values, keyed by complex and prime.
// A missing or corrupt file is treated as empty.

#include <modp/invariants.hpp>
#include <modp/io.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace modp::cli {

class ResultCache {
public:
    // Warnings about unreadable files go to `warnings`.
    ResultCache(std::filesystem::path path, std::ostream & warnings);

    // Entries whose witness does not verify are skipped with a warning.
    std::optional<InvariantResult> lookup(const ComplexDescriptor & complex, Prime p) const;
    // Intervals are ignored. Writes the file immediately.
    void store(const InvariantResult & result);

    const std::filesystem::path & path() const noexcept { return path_; }

    static std::string key(const ComplexDescriptor & complex, Prime p);

private:
    std::filesystem::path path_;
    std::ostream & warnings_;
    Json entries_ = Json::object();
};

// --cache, then $MODP_CACHE, then $XDG_DATA_HOME/modp or ~/.local/share/modp.
// Empty if none can be determined.
std::filesystem::path resolve_cache_path(const std::string & flag);

} // namespace modp::cli
