#include "rigidepth/simplicial.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace rigidepth;

namespace {

std::set<std::uint64_t> listed_faces(const Complex& c) {
    std::set<std::uint64_t> out;
    for (Face f : c.all_faces()) out.insert(f.bits());
    return out;
}

}  // namespace

TEST_CASE("faces are bitmasks over 1-based vertices") {
    const Face f{1, 3, 4};
    CHECK(f.size() == 3);
    CHECK(f.dim() == 2);
    CHECK(f.contains(3));
    CHECK_FALSE(f.contains(2));
    CHECK(f.vertices() == std::vector<int>{1, 3, 4});
    CHECK(f.max_vertex() == 4);
    CHECK(Face{1, 3}.is_subset_of(f));
    CHECK((f - Face{3}) == Face{1, 4});
    CHECK(f.to_string() == "{1,3,4}");
    CHECK(Face().empty());
    CHECK(Face::full(3) == Face{1, 2, 3});
    CHECK_THROWS_AS(Face{0}, std::out_of_range);
    CHECK_THROWS_AS(Face{65}, std::out_of_range);
}

TEST_CASE("subsets come in colex order") {
    const auto subs = subsets_of_size(Face::full(4), 2);
    REQUIRE(subs.size() == 6);
    CHECK(subs.front() == Face{1, 2});
    CHECK(subs[1] == Face{1, 3});
    CHECK(subs[2] == Face{2, 3});
    CHECK(subs.back() == Face{3, 4});
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    CHECK(subsets_of_size(Face{2, 5}, 0) == std::vector<Face>{Face()});
    CHECK(subsets_of_size(Face{2, 5}, 3).empty());
}

TEST_CASE("complexes keep only maximal candidates") {
    const auto c = Complex::from_facets(4, {Face{1, 2}, Face{1}, Face{2, 3}, Face{1, 2}});
    CHECK(c.facets() == std::vector<Face>{Face{1, 2}, Face{2, 3}});
    CHECK(c.kind() == ComplexKind::ordinary);
    CHECK(c.dimension() == 1);
    CHECK(c.is_pure());
    CHECK(c.contains(Face{3}));
    CHECK_FALSE(c.contains(Face{1, 3}));
    CHECK(c.vertex_support() == Face{1, 2, 3});
    CHECK_THROWS_AS(Complex::from_facets(2, {Face{3}}), std::out_of_range);
}

TEST_CASE("void and irrelevant complexes") {
    const auto v = Complex::void_complex(3);
    CHECK(v.is_void());
    CHECK(v.dimension() == -2);
    CHECK(v.all_faces().empty());
    const auto irr = Complex::from_facets(3, {Face()});
    CHECK(irr.kind() == ComplexKind::irrelevant);
    CHECK(irr.dimension() == -1);
    CHECK(irr.all_faces() == std::vector<Face>{Face()});
    CHECK(skeleton(Complex::simplex(3, Face{1, 2}), -1) == irr);
}

TEST_CASE("skeleton, link and star of a triangle with a tail") {
    const auto c = Complex::from_facets(4, {Face{1, 2, 3}, Face{3, 4}});
    CHECK(skeleton(c, 0).facets() == std::vector<Face>{Face{1}, Face{2}, Face{3}, Face{4}});
    CHECK(skeleton(c, 1).facets().size() == 4);
    CHECK(skeleton(c, 2) == c);
    CHECK_THROWS_AS(skeleton(c, 3), std::out_of_range);
    CHECK_THROWS_AS(skeleton(c, -2), std::out_of_range);
    CHECK(link(c, Face{3}).facets() == std::vector<Face>{Face{1, 2}, Face{4}});
    CHECK(link(c, Face{1, 2}).facets() == std::vector<Face>{Face{3}});
    CHECK(link(c, Face{1, 2, 3}).kind() == ComplexKind::irrelevant);
    CHECK(link(c, Face()) == c);
    CHECK_THROWS_AS(link(c, Face{1, 4}), std::invalid_argument);
    CHECK(star(c, Face{4}).facets() == std::vector<Face>{Face{3, 4}});
    CHECK(star(c, Face{3}) == c);
}

TEST_CASE("facet subcomplexes by index and mask") {
    const auto c = Complex::from_facets(5, {Face{1, 2}, Face{2, 3}, Face{4, 5}});
    const std::vector<std::size_t> idx{0, 2};
    CHECK(facet_subcomplex(c, idx).facets() == std::vector<Face>{Face{1, 2}, Face{4, 5}});
    CHECK(facet_subcomplex_mask(c, 0b101) == facet_subcomplex(c, idx));
    CHECK_THROWS(facet_subcomplex(c, std::vector<std::size_t>{}));
    CHECK_THROWS(facet_subcomplex(c, std::vector<std::size_t>{7}));
}

TEST_CASE("face listings match brute force on random complexes") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = gen::uniform(rng, 1, 7);
        const auto c = gen::random_complex(rng, n, 5);
        const auto brute = oracle::face_set(c);
        CHECK(listed_faces(c) == brute);
        int listed = 0;
        for (int i = -1; i <= c.dimension(); ++i) {
            const auto level = c.faces(i);
            CHECK(std::is_sorted(level.begin(), level.end()));
            for (Face f : level) CHECK(f.dim() == i);
            listed += static_cast<int>(level.size());
        }
        CHECK(listed == static_cast<int>(brute.size()));
        for (Face f : c.facets()) {
            for (Face g : c.facets()) CHECK((f == g || !f.is_subset_of(g)));
        }
    }
}

TEST_CASE("links, stars and skeletons match brute force") {
    gen::Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = gen::uniform(rng, 2, 6);
        const auto c = gen::random_complex(rng, n, 4);
        const auto brute = oracle::face_set(c);
        for (Face f : c.all_faces()) {
            CHECK(listed_faces(link(c, f)) == oracle::link(brute, f.bits()));
            std::set<std::uint64_t> st;
            for (auto g : brute) {
                if (brute.count(g | f.bits())) st.insert(g);
            }
            CHECK(listed_faces(star(c, f)) == st);
        }
        for (int i = -1; i <= c.dimension(); ++i) CHECK(listed_faces(skeleton(c, i)) == oracle::skeleton(brute, i));
    }
}

TEST_CASE("skeletons of pure complexes are pure") {
    gen::Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = gen::random_pure_complex(rng, 7, 5);
        for (int i = 0; i <= c.dimension(); ++i) {
            const auto sk = skeleton(c, i);
            CHECK(sk.is_pure());
            CHECK(sk.dimension() == i);
        }
    }
}
