#include "rigidepth/io.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <functional>
#include <string>

using namespace rigidepth;
using io::Json;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const io::InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("complexes round-trip") {
    gen::Rng rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = gen::random_complex(rng, gen::uniform(rng, 1, 7), 5);
        const Json j = io::to_json(c);
        CHECK(io::complex_from_json(Json::parse(j.dump())) == c);
        CHECK(Json::parse(j.dump()) == j);
    }
    const auto v = Complex::void_complex(3);
    CHECK(io::complex_from_json(io::to_json(v)) == v);
    const auto irr = Complex::from_facets(3, {Face()});
    CHECK(io::to_json(irr).dump() == R"({"n":3,"facets":[[]]})");
    CHECK(io::complex_from_json(io::to_json(irr)) == irr);
}

TEST_CASE("ideals and decompositions round-trip") {
    gen::Rng rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        const auto i = gen::random_ideal(rng, 3, 4, 3);
        CHECK(io::ideal_from_json(Json::parse(io::to_json(i).dump())) == i);
        const auto c = gen::random_pure_complex(rng, 5, 4);
        const auto d = gen::random_decomposition(rng, c, 3, gen::ComponentStyle::general);
        const auto back = io::decomposition_from_json(Json::parse(io::to_json(d).dump()));
        CHECK(back.complex() == d.complex());
        CHECK(back.components() == d.components());
    }
}

TEST_CASE("cone unions round-trip") {
    const auto ref = fourcycle_reference_system();
    const Json j = io::to_json(ref);
    CHECK(j["symbols"][0] == Json{{"facet", 1}, {"var", 3}});
    CHECK(j["disjuncts"][0][1]["rel"] == "=");
    CHECK(io::cone_union_from_json(Json::parse(j.dump())) == ref);
}

TEST_CASE("decomposition sugars") {
    const auto doc = io::parse_text(R"({
        "complex": {"n": 3, "facets": [[1], [2]]},
        "components": [
            {"facet": [2], "power": 2},
            {"facet": [1], "irreducible": [0, 3, 1]}
        ]})",
                                    "inline");
    CHECK(io::detect_kind(doc, "inline") == io::InputKind::decomposition);
    const auto d = io::decomposition_from_json(doc);
    CHECK(d.component(0) == MonomialIdeal(3, {Monomial({0, 3, 0}), Monomial({0, 0, 1})}));
    CHECK(d.component(1) == MonomialIdeal::face_prime_power(3, Face{2}, 2));
}

TEST_CASE("kinds are detected by their keys") {
    CHECK(io::detect_kind(Json{{"n", 2}, {"facets", Json::array()}}, "x") == io::InputKind::complex);
    CHECK(io::detect_kind(Json{{"n", 2}, {"generators", Json::array()}}, "x") == io::InputKind::ideal);
    CHECK(io::detect_kind(Json{{"disjuncts", Json::array()}}, "x") == io::InputKind::cone_union);
    CHECK_THROWS_AS(io::detect_kind(Json{{"n", 2}}, "x"), io::InputError);
    CHECK_THROWS_AS(io::detect_kind(Json::array(), "x"), io::InputError);
}

TEST_CASE("syntax errors report line and column") {
    const auto msg = error_of([] { io::parse_text("{\n  \"n\": 3,\n  \"facets\": [[1,2],]\n}", "bad.json"); });
    CHECK(msg.find("bad.json:3:") == 0);
}

TEST_CASE("semantic errors name the offending field") {
    CHECK(error_of([] { io::complex_from_json(Json::parse(R"({"n": 3, "facets": [[1, 4]]})")); })
              .find("$.facets[0][1]") == 0);
    CHECK(error_of([] { io::complex_from_json(Json::parse(R"({"facets": []})")); }).find("missing field \"n\"") !=
          std::string::npos);
    CHECK(error_of([] { io::complex_from_json(Json::parse(R"({"n": "x", "facets": []})")); }).find("$.n") == 0);
    CHECK(error_of([] { io::ideal_from_json(Json::parse(R"({"n": 2, "generators": [[1]]})")); })
              .find("$.generators[0]") == 0);
    CHECK(error_of([] { io::ideal_from_json(Json::parse(R"({"n": 2, "generators": [[1, -1]]})")); })
              .find("negative") != std::string::npos);
    CHECK(error_of([] {
              io::decomposition_from_json(Json::parse(
                  R"({"complex": {"n": 2, "facets": [[1], [2]]}, "components": [{"facet": [1], "power": 1}]})"));
          }).find("$.components") == 0);
    CHECK(error_of([] {
              io::decomposition_from_json(Json::parse(R"({"complex": {"n": 2, "facets": [[1], [2]]},
                  "components": [{"facet": [1], "power": 1}, {"facet": [1], "power": 2}]})"));
          }).find("appears twice") != std::string::npos);
    CHECK(error_of([] {
              io::decomposition_from_json(Json::parse(R"({"complex": {"n": 2, "facets": [[1], [2]]},
                  "components": [{"facet": [1], "generators": [[0, 1]]}, {"facet": [2], "generators": [[1, 1]]}]})"));
          }).find("$") == 0);
    CHECK(error_of([] {
              io::decomposition_from_json(Json::parse(R"({"complex": {"n": 2, "facets": [[1], [2]]},
                  "components": [{"facet": [1], "power": 1}, {"facet": [2]}]})"));
          }).find("$.components[1]") == 0);
    CHECK(error_of([] {
              io::cone_union_from_json(Json::parse(R"({"n": 2, "symbols": [{"facet": 1, "var": 2}],
                  "disjuncts": [[{"left": 0, "rel": "<", "right": 0}]]})"));
          }).find("$.disjuncts[0][0].rel") == 0);
    CHECK(error_of([] {
              io::cone_union_from_json(Json::parse(R"({"n": 2, "symbols": [{"facet": 1, "var": 2}],
                  "disjuncts": [[{"left": 0, "rel": ">=", "right": 3}]]})"));
          }).find("$.disjuncts[0][0].right") == 0);
}

TEST_CASE("missing files are input errors") {
    CHECK_THROWS_AS(io::load_file("/nonexistent/file.json"), io::InputError);
}
