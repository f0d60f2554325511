// JSON file formats. Vertices and variables are 1-based in every file.
//
//   complex:        {"n": 4, "facets": [[1,2],[2,3]]}
//   ideal:          {"n": 3, "generators": [[2,0,1],[0,1,0]]}   exponent vectors
//   decomposition:  {"complex": {...}, "components": [
//                      {"facet": [1,2], "generators": [[...], ...]},
//                      {"facet": [2,3], "power": 2},
//                      {"facet": [3,4], "irreducible": [e_1, ..., e_n]}]}
//   cone union:     {"n": 4, "symbols": [{"facet": 1, "var": 3}, ...],
//                    "disjuncts": [[{"left": 0, "rel": ">=", "right": 5}, ...], ...]}
//                   left/right index the symbols array (0-based).

#pragma once

#include "rigidepth/cones.hpp"
#include "rigidepth/ideals.hpp"
#include "rigidepth/simplicial.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace rigidepth::io {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the source and the line or field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses JSON text; syntax errors report "source:line:column".
Json parse_text(const std::string& text, const std::string& source);
Json load_file(const std::filesystem::path& path);

enum class InputKind { complex, ideal, decomposition, cone_union };

/// Classifies by keys: "components", "disjuncts", "generators", "facets".
InputKind detect_kind(const Json& doc, const std::string& source);

Complex complex_from_json(const Json& doc, const std::string& path = "$");
MonomialIdeal ideal_from_json(const Json& doc, const std::string& path = "$");
Decomposition decomposition_from_json(const Json& doc, const std::string& path = "$");
ConeUnion cone_union_from_json(const Json& doc, const std::string& path = "$");

Json to_json(const Face& f);
Json to_json(const Complex& c);
Json to_json(const MonomialIdeal& ideal);
/// Components are written as explicit generators.
Json to_json(const Decomposition& d);
Json to_json(const ConeUnion& u);

}  // namespace rigidepth::io
