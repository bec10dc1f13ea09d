#include <modp/io.hpp>

#include <modp/errors.hpp>

#include <fstream>
#include <sstream>

namespace modp {

namespace {

template <typename T>
T field(const Json & j, const char * key)
{
    if (! j.is_object() || ! j.contains(key))
        throw FormatError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception & e) {
        throw FormatError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

} // namespace

ComplexDescriptor complex_from_json(const Json & j)
{
    if (! j.is_object() || j.size() != 1)
        throw FormatError("complex must be an object with exactly one of skeleton, universal, explicit");
    try {
        if (j.contains("skeleton")) {
            const auto & s = j["skeleton"];
            return ComplexDescriptor::skeleton(field<int>(s, "m"), field<int>(s, "k"));
        }
        if (j.contains("universal")) {
            const auto & u = j["universal"];
            return ComplexDescriptor::universal(Prime(field<std::uint32_t>(u, "p")), field<int>(u, "n"));
        }
        if (j.contains("explicit")) {
            const auto & e = j["explicit"];
            return ComplexDescriptor::explicit_complex(field<int>(e, "vertices"),
                field<std::vector<std::vector<int>>>(e, "maximal_simplices"));
        }
    } catch (const FormatError &) {
        throw;
    } catch (const Error & e) {
        throw FormatError(std::string("invalid complex: ") + e.what());
    }
    throw FormatError("unknown complex kind: " + j.begin().key());
}

Json complex_to_json(const ComplexDescriptor & complex)
{
    if (auto s = complex.as_skeleton())
        return {{"skeleton", {{"m", s->m}, {"k", s->k}}}};
    if (auto u = complex.as_universal())
        return {{"universal", {{"p", u->p.value()}, {"n", u->n}}}};
    const auto * e = complex.as_explicit();
    return {{"explicit", {{"vertices", e->vertex_count}, {"maximal_simplices", e->maximal_simplices}}}};
}

VertexMap vertex_map_from_json(const Json & j)
{
    try {
        VertexMap map{Prime(field<std::uint32_t>(j, "p")), field<int>(j, "r"), {}};
        const auto & assignments = j.at("assignments");
        if (! assignments.is_object())
            throw FormatError("\"assignments\" must be an object");
        for (const auto & [key, value] : assignments.items()) {
            std::size_t used = 0;
            int vertex = std::stoi(key, &used);
            if (used != key.size())
                throw FormatError("vertex key \"" + key + "\" is not an integer");
            auto coords = value.get<std::vector<std::int64_t>>();
            for (auto c : coords)
                if (c < 0 || c >= static_cast<std::int64_t>(map.p.value()))
                    throw FormatError("residue " + std::to_string(c) + " out of range for vertex " + key);
            map.assignments.emplace(vertex, FpVector(map.p, std::move(coords)));
        }
        map.validate();
        return map;
    } catch (const FormatError &) {
        throw;
    } catch (const Error & e) {
        throw FormatError(std::string("invalid map: ") + e.what());
    } catch (const std::exception & e) {
        throw FormatError(std::string("invalid map: ") + e.what());
    }
}

Json vertex_map_to_json(const VertexMap & map)
{
    Json assignments = Json::object();
    for (const auto & [v, image] : map.assignments)
        assignments[std::to_string(v)] = std::vector<std::uint32_t>(image.coords().begin(), image.coords().end());
    return {{"p", map.p.value()}, {"r", map.r}, {"assignments", assignments}};
}

Json invariant_to_json(const InvariantResult & result)
{
    Json j{{"complex", complex_to_json(result.complex)},
        {"p", result.p.value()},
        {"exact", result.exact()},
        {"lower", result.lower},
        {"upper", result.upper},
        {"lower_method", to_string(result.lower_source.method)},
        {"lower_rule", result.lower_source.rule},
        {"upper_method", to_string(result.upper_source.method)},
        {"upper_rule", result.upper_source.rule},
        {"nodes", result.nodes}};
    if (result.exact())
        j["value"] = result.lower;
    if (result.nonexistence_r)
        j["nonexistence_r"] = *result.nonexistence_r;
    return j;
}

Json load_json_argument(std::string_view text)
{
    std::string content;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        content = std::string(text);
    else
        content = read_text_file(std::filesystem::path(std::string(text)));
    try {
        return Json::parse(content);
    } catch (const Json::parse_error & e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_text_file(const std::filesystem::path & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw FormatError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file_atomic(const std::filesystem::path & path, std::string_view content)
{
    auto dir = path.parent_path();
    if (! dir.empty())
        std::filesystem::create_directories(dir);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (! out)
            throw Error("cannot write " + tmp.string());
        out << content;
        if (! out.flush())
            throw Error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace modp
