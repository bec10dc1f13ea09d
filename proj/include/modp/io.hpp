#pragma once

// JSON forms of complexes, vertex maps and invariant results.
//
//   complex: {"skeleton": {"m": M, "k": K}}
//            {"universal": {"p": P, "n": N}}
//            {"explicit": {"vertices": V, "maximal_simplices": [[i, ...], ...]}}
//   map:     {"p": P, "r": R, "assignments": {"0": [c1, ..., cR], ...}}
//
// Vertex indices are 0-based; residues lie in [0, P-1].

#include <modp/complex.hpp>
#include <modp/invariants.hpp>
#include <modp/search.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace modp {

using Json = nlohmann::json;

// Throw FormatError on malformed input.
ComplexDescriptor complex_from_json(const Json & j);
Json complex_to_json(const ComplexDescriptor & complex);

VertexMap vertex_map_from_json(const Json & j);
Json vertex_map_to_json(const VertexMap & map);

Json invariant_to_json(const InvariantResult & result);

// Parses `text` as JSON, or reads it as a file path when it does not start
// with '{'.
Json load_json_argument(std::string_view text);

std::string read_text_file(const std::filesystem::path & path);
// Writes through a temporary file in the same directory and renames it.
void write_text_file_atomic(const std::filesystem::path & path, std::string_view content);

} // namespace modp
