#include "cache.hpp"

#include <modp/errors.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>

namespace modp::cli {

namespace {

Method method_from(const std::string & s)
{
    if (s == "search")
        return Method::Search;
    if (s == "cached")
        return Method::Cached;
    if (s == "registry")
        return Method::Registry;
    return Method::ClosedForm;
}

std::string utc_now()
{
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

ResultCache::ResultCache(std::filesystem::path path, std::ostream & warnings) :
    path_(std::move(path)),
    warnings_(warnings)
{
    std::error_code ec;
    if (path_.empty() || ! std::filesystem::exists(path_, ec))
        return;
    try {
        auto j = Json::parse(read_text_file(path_));
        if (! j.is_object() || ! j.contains("entries") || ! j["entries"].is_object())
            throw FormatError("unexpected layout");
        entries_ = j["entries"];
    } catch (const std::exception & e) {
        warnings_ << "warning: ignoring unreadable cache " << path_.string() << ": " << e.what() << "\n";
        entries_ = Json::object();
    }
}

std::string ResultCache::key(const ComplexDescriptor & complex, Prime p)
{
    return complex.canonical_string() + "|p=" + std::to_string(p.value());
}

std::optional<InvariantResult> ResultCache::lookup(const ComplexDescriptor & complex, Prime p) const
{
    auto it = entries_.find(key(complex, p));
    if (it == entries_.end())
        return std::nullopt;
    try {
        const auto & e = *it;
        InvariantResult r{complex, p};
        r.lower = r.upper = e.at("value").get<int>();
        r.lower_source = {method_from(e.at("lower_method").get<std::string>()), e.at("lower_rule").get<std::string>()};
        r.upper_source = {method_from(e.at("upper_method").get<std::string>()), e.at("upper_rule").get<std::string>()};
        if (e.contains("nonexistence_r"))
            r.nonexistence_r = e["nonexistence_r"].get<int>();
        if (! e.contains("witness"))
            throw FormatError("entry has no witness");
        r.witness = vertex_map_from_json(e["witness"]);
        // The stored value must be backed by its own witness.
        if (r.witness->p != p || r.witness->r != complex.vertex_count() - r.lower ||
            ! check_nondegenerate(complex, *r.witness))
            throw FormatError("witness does not certify the stored value");
        return r;
    } catch (const std::exception & e) {
        warnings_ << "warning: ignoring bad cache entry " << key(complex, p) << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

void ResultCache::store(const InvariantResult & result)
{
    if (path_.empty() || ! result.exact())
        return;
    Json e{{"value", result.lower},
        {"lower_method", to_string(result.lower_source.method)},
        {"lower_rule", result.lower_source.rule},
        {"upper_method", to_string(result.upper_source.method)},
        {"upper_rule", result.upper_source.rule},
        {"created", utc_now()},
        {"tool_version", MODP_VERSION}};
    if (result.nonexistence_r)
        e["nonexistence_r"] = *result.nonexistence_r;
    if (result.witness)
        e["witness"] = vertex_map_to_json(*result.witness);
    entries_[key(result.complex, result.p)] = std::move(e);
    try {
        Json doc{{"entries", entries_}};
        write_text_file_atomic(path_, doc.dump(1));
    } catch (const std::exception & ex) {
        warnings_ << "warning: could not write cache " << path_.string() << ": " << ex.what() << "\n";
    }
}

std::filesystem::path resolve_cache_path(const std::string & flag)
{
    if (! flag.empty())
        return flag;
    if (const char * env = std::getenv("MODP_CACHE"); env && *env)
        return env;
    if (const char * xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "modp" / "cache.json";
    if (const char * home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".local" / "share" / "modp" / "cache.json";
    return {};
}

} // namespace modp::cli
