#include "rigidepth/cones.hpp"
#include "rigidepth/criteria.hpp"
#include "rigidepth/homology.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace rigidepth;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

const std::vector<int> kA{3, 5, 1, 3, 5, 9, 7, 9};
const std::vector<int> kAPrime{1, 3, 1, 1, 7, 11, 11, 1};
const std::vector<int> kB{2, 4, 1, 2, 6, 10, 9, 5};

template <typename Visit>
void each_point(const std::vector<int>& lo, const std::vector<int>& hi, Visit visit) {
    std::vector<int> a = lo;
    while (true) {
        visit(a);
        std::size_t j = a.size();
        while (j > 0 && a[j - 1] == hi[j - 1]) {
            a[j - 1] = lo[j - 1];
            --j;
        }
        if (j == 0) return;
        ++a[j - 1];
    }
}

}  // namespace

TEST_CASE("degree vector supports") {
    const DegreeVector a{{-1, 0, 2, -3}};
    CHECK(a.negative_support() == Face{1, 4});
    CHECK(a.positive_support() == Face{3});
}

TEST_CASE("small ideals with known depth") {
    CHECK(depth_via_takayama(MonomialIdeal(1, {Monomial({2})}), Q) == 0);
    CHECK(depth_via_takayama(MonomialIdeal(2, {Monomial({1, 1})}), Q) == 1);
    // (x1^2, x1 x2) has the maximal ideal as an embedded prime.
    CHECK(depth_via_takayama(MonomialIdeal(2, {Monomial({2, 0}), Monomial({1, 1})}), Q) == 0);
    CHECK(depth_via_takayama(MonomialIdeal(3, {Monomial({1, 0, 0})}), Q) == 2);
    CHECK(koszul_depth_oracle(MonomialIdeal(2, {Monomial({2, 0}), Monomial({1, 1})}), Q) == 0);
    CHECK(koszul_depth_oracle(MonomialIdeal(3, {Monomial({1, 0, 0})}), Q) == 2);
    CHECK_THROWS(depth_via_takayama(MonomialIdeal::zero(2), Q));
    CHECK_THROWS(depth_via_takayama(MonomialIdeal(2, {Monomial::one(2)}), Q));
}

TEST_CASE("4-cycle exponent vectors: a and a' keep depth 2, their midpoint drops it") {
    for (const auto* v : {&kA, &kAPrime}) {
        const auto d = fourcycle_decomposition(*v);
        const auto verdict = depth_equals_radical(d, Q);
        CHECK(verdict.t == 2);
        CHECK(verdict.equal);
        CHECK(verdict.subcomplex_condition);
        CHECK(depth_via_takayama(d, Q) == 2);
        CHECK(depth_via_takayama(d.intersection(), Q) == 2);
    }
    const auto d = fourcycle_decomposition(kB);
    const auto verdict = depth_equals_radical(d, Q);
    CHECK_FALSE(verdict.equal);
    CHECK_FALSE(verdict.degree_condition);
    CHECK_FALSE(verdict.subcomplex_condition);
    REQUIRE(verdict.degree_witness.has_value());
    CHECK(verdict.gamma_depth < 2);
    // The witness selects a disconnected pair of edges.
    const auto& gamma = *verdict.gamma_witness;
    REQUIRE(gamma.size() == 2);
    CHECK_FALSE(d.complex().facets()[gamma[0]].intersects(d.complex().facets()[gamma[1]]));
    CHECK(delta_a_facet_mask(d, *verdict.degree_witness) ==
          ((std::uint64_t{1} << gamma[0]) | (std::uint64_t{1} << gamma[1])));
    CHECK(depth_via_takayama(d, Q) == 1);
    CHECK(koszul_depth_oracle(d.intersection(), Q) == 1);
}

TEST_CASE("facet-form degree complexes") {
    const auto d = fourcycle_decomposition(kB);
    const std::vector<int> zero(4, 0);
    CHECK(delta_a_facet_form(d, zero) == d.complex());
    const std::vector<int> large(4, 20);
    CHECK(delta_a_facet_form(d, large).is_void());
    const std::vector<int> negative{-1, 0, 0, 0};
    CHECK_THROWS_AS(delta_a_facet_form(d, negative), std::invalid_argument);
    const std::vector<int> short_vec{1, 2};
    CHECK_THROWS_AS(delta_a_facet_form(d, short_vec), std::invalid_argument);
}

TEST_CASE("facet form equals localization form on nonnegative degrees") {
    gen::Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = gen::random_pure_complex(rng, 5, 4);
        const auto d = gen::random_decomposition(rng, c, 3, gen::ComponentStyle::general);
        const auto i = d.intersection();
        const std::vector<int> lo(static_cast<std::size_t>(c.n()), 0);
        each_point(lo, d.component_caps(), [&](const std::vector<int>& a) {
            CHECK(delta_a_facet_form(d, a) == delta_a_localization_form(i, a));
        });
    }
}

TEST_CASE("localization form with negative entries is a link in the facet form") {
    gen::Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = gen::random_pure_complex(rng, 5, 4);
        const auto d = gen::random_decomposition(rng, c, 2, gen::ComponentStyle::general);
        const auto i = d.intersection();
        std::vector<int> lo(static_cast<std::size_t>(c.n()), -1);
        std::vector<int> hi = d.component_caps();
        each_point(lo, hi, [&](const std::vector<int>& a) {
            std::vector<int> positive = a;
            Face g;
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (a[j] < 0) {
                    positive[j] = 0;
                    g = g | Face{static_cast<int>(j) + 1};
                }
            }
            const auto upper = delta_a_facet_form(d, positive);
            const auto local = delta_a_localization_form(i, a);
            if (upper.is_void() || !upper.contains(g)) {
                CHECK(local.is_void());
            } else {
                CHECK(local == link(upper, g));
            }
        });
    }
}

TEST_CASE("a degree selects Gamma exactly when it lies in L_Gamma") {
    gen::Rng rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = gen::random_pure_complex(rng, 5, 4);
        const auto d = gen::random_decomposition(rng, c, 3, gen::ComponentStyle::general);
        const std::uint64_t all = (std::uint64_t{1} << c.facet_count()) - 1;
        const std::vector<int> lo(static_cast<std::size_t>(c.n()), 0);
        each_point(lo, d.component_caps(), [&](const std::vector<int>& a) {
            const auto selected = delta_a_facet_mask(d, a);
            for (std::uint64_t mask = 0; mask <= all; ++mask) CHECK(in_l_gamma(d, mask, a) == (mask == selected));
        });
    }
}

TEST_CASE("L_Gamma witnesses") {
    const auto d = fourcycle_decomposition(kB);
    const std::vector<std::size_t> whole{0, 1, 2, 3};
    CHECK_THROWS_AS(l_gamma_witness(d, whole), std::invalid_argument);
    CHECK_THROWS_AS(l_gamma_witness(d, std::vector<std::size_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(l_gamma_witness(d, std::vector<std::size_t>{9}), std::out_of_range);
    const auto verdict = depth_equals_radical(d, Q);
    const auto witness = l_gamma_witness(d, *verdict.gamma_witness);
    REQUIRE(witness.has_value());
    std::uint64_t mask = 0;
    for (std::size_t k : *verdict.gamma_witness) mask |= std::uint64_t{1} << k;
    CHECK(in_l_gamma(d, mask, *witness));
}

TEST_CASE("Takayama dimensions vanish outside the admissible range") {
    const auto i = fourcycle_decomposition(kB).intersection();
    const auto rhos = rho_vector(i);
    std::vector<int> beyond(4, 0);
    beyond[0] = rhos[0];
    for (int idx = 0; idx <= 4; ++idx) CHECK(takayama_dim(i, idx, beyond, Q) == 0);
    CHECK(takayama_dim(i, -1, std::vector<int>(4, 0), Q) == 0);
    // x1 x3 is a nonface of the 4-cycle, so G = {1,3} contributes nothing.
    const std::vector<int> nonface{-1, 0, -1, 0};
    for (int idx = 0; idx <= 4; ++idx) CHECK(takayama_dim(i, idx, nonface, Q) == 0);
}

TEST_CASE("local cohomology table agrees with pointwise dimensions") {
    gen::Rng rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = gen::uniform(rng, 1, 3);
        const auto i = gen::random_ideal(rng, n, 4, 3);
        const auto cells = local_cohomology_table(i, Q, n);
        int least = n + 1;
        for (const auto& cell : cells) {
            CHECK(cell.dimension == takayama_dim(i, cell.index, cell.degree.entries, Q));
            least = std::min(least, cell.index);
        }
        CHECK(least == depth_via_takayama(i, Q));
        CHECK(std::is_sorted(cells.begin(), cells.end(),
                             [](const auto& x, const auto& y) { return x.index < y.index; }));
    }
}

TEST_CASE("squarefree depth via local cohomology equals the skeleton formula") {
    gen::Rng rng(45);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = gen::random_complex(rng, gen::uniform(rng, 2, 6), 5);
        const auto i = MonomialIdeal::stanley_reisner(c);
        if (i.is_zero()) continue;
        for (const auto& field : {Q, F2}) CHECK(depth_via_takayama(i, field) == depth_stanley_reisner(c, field));
    }
}

TEST_CASE("decomposition fast path matches the generic computation") {
    gen::Rng rng(46);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = gen::random_pure_complex(rng, 5, 4);
        const auto d = gen::random_decomposition(rng, c, 3, gen::ComponentStyle::general);
        CHECK(depth_via_takayama(d, Q) == depth_via_takayama(d.intersection(), Q));
    }
}

TEST_CASE("the three depth conditions agree and depth never exceeds the radical's") {
    gen::Rng rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = gen::random_pure_complex(rng, 5, 4);
        const auto d = gen::random_decomposition(rng, c, 3, gen::ComponentStyle::general);
        const auto audit = audit_depth_criteria(d, Q);
        CHECK(audit.consistent());
        CHECK(audit.depth <= audit.t);
        CHECK(audit.t == depth_stanley_reisner(c, Q));
    }
}
