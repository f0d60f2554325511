#include "rigidepth/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rigidepth::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InputError(path + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

int as_int(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < -1'000'000 || x > 1'000'000) fail(path, "integer out of range");
    return static_cast<int>(x);
}

const Json& as_array(const Json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array");
    return v;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& path, const char* key) { return path + "." + key; }

int read_n(const Json& doc, const std::string& path) {
    const int n = as_int(member(doc, "n", path), dot(path, "n"));
    if (n < 0 || n > 64) fail(dot(path, "n"), "must lie in 0..64");
    return n;
}

std::vector<int> int_list(const Json& v, const std::string& path) {
    std::vector<int> out;
    const auto& arr = as_array(v, path);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_int(arr[i], at(path, i)));
    return out;
}

Face face_from(const Json& v, int n, const std::string& path) {
    const auto verts = int_list(v, path);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 1 || verts[i] > n) {
            fail(at(path, i), "vertex " + std::to_string(verts[i]) + " outside 1.." + std::to_string(n));
        }
    }
    return Face::from_vertices(verts);
}

std::vector<Monomial> generators_from(const Json& v, int n, const std::string& path) {
    std::vector<Monomial> gens;
    const auto& arr = as_array(v, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto exps = int_list(arr[i], at(path, i));
        if (static_cast<int>(exps.size()) != n) {
            fail(at(path, i), "exponent vector has " + std::to_string(exps.size()) + " entries, expected " +
                                  std::to_string(n));
        }
        if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; })) {
            fail(at(path, i), "negative exponent");
        }
        gens.emplace_back(std::move(exps));
    }
    return gens;
}

MonomialIdeal component_from(const Json& comp, const Complex& delta, Face f, const std::string& path) {
    const int n = delta.n();
    try {
        if (comp.contains("generators")) {
            return MonomialIdeal(n, generators_from(comp["generators"], n, dot(path, "generators")));
        }
        if (comp.contains("power")) {
            return MonomialIdeal::face_prime_power(n, f, as_int(comp["power"], dot(path, "power")));
        }
        if (comp.contains("irreducible")) {
            const auto exps = int_list(comp["irreducible"], dot(path, "irreducible"));
            return MonomialIdeal::irreducible(n, f, exps);
        }
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
    fail(path, "component needs one of \"generators\", \"power\", \"irreducible\"");
}

}  // namespace

Json parse_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // Byte offsets are 1-based and point just past the offending byte.
        const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n');
        const auto last_nl = text.rfind('\n', offset == 0 ? 0 : offset - 1);
        const std::size_t column = last_nl == std::string::npos || offset == 0 ? offset + 1 : offset - last_nl;
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": invalid JSON: " + e.what());
    }
}

Json load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), path.string());
}

InputKind detect_kind(const Json& doc, const std::string& source) {
    if (!doc.is_object()) throw InputError(source + ": top-level value must be an object");
    if (doc.contains("components")) return InputKind::decomposition;
    if (doc.contains("disjuncts")) return InputKind::cone_union;
    if (doc.contains("generators")) return InputKind::ideal;
    if (doc.contains("facets")) return InputKind::complex;
    throw InputError(source + ": cannot tell the input kind (expected \"facets\", \"generators\", "
                              "\"components\" or \"disjuncts\")");
}

Complex complex_from_json(const Json& doc, const std::string& path) {
    const int n = read_n(doc, path);
    const std::string fpath = dot(path, "facets");
    const auto& arr = as_array(member(doc, "facets", path), fpath);
    std::vector<Face> facets;
    for (std::size_t i = 0; i < arr.size(); ++i) facets.push_back(face_from(arr[i], n, at(fpath, i)));
    return Complex::from_facets(n, std::move(facets));
}

MonomialIdeal ideal_from_json(const Json& doc, const std::string& path) {
    const int n = read_n(doc, path);
    return MonomialIdeal(n, generators_from(member(doc, "generators", path), n, dot(path, "generators")));
}

Decomposition decomposition_from_json(const Json& doc, const std::string& path) {
    const std::string cpath = dot(path, "complex");
    const Complex delta = complex_from_json(member(doc, "complex", path), cpath);
    const std::string kpath = dot(path, "components");
    const auto& arr = as_array(member(doc, "components", path), kpath);
    if (arr.size() != delta.facet_count()) {
        fail(kpath, "has " + std::to_string(arr.size()) + " entries for " + std::to_string(delta.facet_count()) +
                        " facets");
    }
    std::vector<std::optional<MonomialIdeal>> slots(delta.facet_count());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = at(kpath, i);
        const Face f = face_from(member(arr[i], "facet", p), delta.n(), dot(p, "facet"));
        auto it = std::find(delta.facets().begin(), delta.facets().end(), f);
        if (it == delta.facets().end()) fail(dot(p, "facet"), f.to_string() + " is not a facet of the complex");
        auto& slot = slots[static_cast<std::size_t>(it - delta.facets().begin())];
        if (slot) fail(dot(p, "facet"), f.to_string() + " appears twice");
        slot = component_from(arr[i], delta, f, p);
    }
    std::vector<MonomialIdeal> comps;
    for (auto& s : slots) comps.push_back(std::move(*s));
    try {
        return Decomposition(delta, std::move(comps));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

ConeUnion cone_union_from_json(const Json& doc, const std::string& path) {
    ConeUnion u;
    u.n = read_n(doc, path);
    const std::string spath = dot(path, "symbols");
    const auto& syms = as_array(member(doc, "symbols", path), spath);
    for (std::size_t i = 0; i < syms.size(); ++i) {
        const std::string p = at(spath, i);
        const int facet = as_int(member(syms[i], "facet", p), dot(p, "facet"));
        const int var = as_int(member(syms[i], "var", p), dot(p, "var"));
        if (facet < 1) fail(dot(p, "facet"), "must be positive");
        if (var < 1 || var > u.n) fail(dot(p, "var"), "outside 1.." + std::to_string(u.n));
        u.symbols.push_back({static_cast<std::size_t>(facet - 1), var - 1});
    }
    if (!std::is_sorted(u.symbols.begin(), u.symbols.end()) ||
        std::adjacent_find(u.symbols.begin(), u.symbols.end()) != u.symbols.end()) {
        fail(spath, "symbols must be distinct and sorted by facet, then variable");
    }
    const std::string dpath = dot(path, "disjuncts");
    const auto& disj = as_array(member(doc, "disjuncts", path), dpath);
    for (std::size_t i = 0; i < disj.size(); ++i) {
        const std::string p = at(dpath, i);
        const auto& conj = as_array(disj[i], p);
        std::vector<Comparison> row;
        for (std::size_t c = 0; c < conj.size(); ++c) {
            const std::string q = at(p, c);
            auto index = [&](const char* key) {
                const int v = as_int(member(conj[c], key, q), dot(q, key));
                if (v < 0 || static_cast<std::size_t>(v) >= u.symbols.size()) {
                    fail(dot(q, key), "symbol index out of range");
                }
                return static_cast<std::size_t>(v);
            };
            const auto& rel = member(conj[c], "rel", q);
            if (!rel.is_string()) fail(dot(q, "rel"), "expected a string");
            Relation relation;
            try {
                relation = parse_relation(rel.get<std::string>());
            } catch (const std::invalid_argument& e) {
                fail(dot(q, "rel"), e.what());
            }
            row.push_back({index("left"), relation, index("right")});
        }
        u.disjuncts.push_back(std::move(row));
    }
    return u;
}

Json to_json(const Face& f) { return Json(f.vertices()); }

Json to_json(const Complex& c) {
    Json facets = Json::array();
    for (const Face& f : c.facets()) facets.push_back(to_json(f));
    return Json{{"n", c.n()}, {"facets", std::move(facets)}};
}

Json to_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
    return Json{{"n", ideal.n()}, {"generators", std::move(gens)}};
}

Json to_json(const Decomposition& d) {
    Json comps = Json::array();
    for (std::size_t k = 0; k < d.components().size(); ++k) {
        comps.push_back(Json{{"facet", to_json(d.complex().facets()[k])},
                             {"generators", to_json(d.component(k))["generators"]}});
    }
    return Json{{"complex", to_json(d.complex())}, {"components", std::move(comps)}};
}

Json to_json(const ConeUnion& u) {
    Json syms = Json::array();
    for (const auto& s : u.symbols) syms.push_back(Json{{"facet", s.facet + 1}, {"var", s.var + 1}});
    Json disj = Json::array();
    for (const auto& conj : u.disjuncts) {
        Json row = Json::array();
        for (const auto& c : conj) {
            row.push_back(Json{{"left", c.left}, {"rel", to_string(c.relation)}, {"right", c.right}});
        }
        disj.push_back(std::move(row));
    }
    return Json{{"n", u.n}, {"symbols", std::move(syms)}, {"disjuncts", std::move(disj)}};
}

}  // namespace rigidepth::io
