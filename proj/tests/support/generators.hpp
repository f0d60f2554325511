// Seeded random instances for property tests.

#pragma once

#include "rigidepth/ideals.hpp"
#include "rigidepth/simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace gen {

using rigidepth::Complex;
using rigidepth::Decomposition;
using rigidepth::Face;
using rigidepth::Monomial;
using rigidepth::MonomialIdeal;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Face random_subset(Rng& rng, int n, int size) {
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v + 1;
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(static_cast<std::size_t>(size));
    return Face::from_vertices(verts);
}

/// Up to `max_facets` random nonempty faces on {1..n}; never void.
inline Complex random_complex(Rng& rng, int n, int max_facets) {
    std::vector<Face> faces;
    const int count = uniform(rng, 1, max_facets);
    for (int i = 0; i < count; ++i) faces.push_back(random_subset(rng, n, uniform(rng, 1, n)));
    return Complex::from_facets(n, faces);
}

/// `r` distinct facets of size d, or fewer if there are not that many.
inline Complex random_pure_complex(Rng& rng, int n, int d, int r) {
    std::vector<Face> faces;
    for (int tries = 0; static_cast<int>(faces.size()) < r && tries < 50 * r; ++tries) {
        const Face f = random_subset(rng, n, d);
        if (std::find(faces.begin(), faces.end(), f) == faces.end()) faces.push_back(f);
    }
    return Complex::from_facets(n, faces);
}

/// Pure complex with n in [3, max_n], r in [1, max_r] and a random facet size
/// below n.
inline Complex random_pure_complex(Rng& rng, int max_n, int max_r) {
    const int n = uniform(rng, 3, max_n);
    return random_pure_complex(rng, n, uniform(rng, 1, n - 1), uniform(rng, 1, max_r));
}

/// Nonzero proper ideal with 1..max_gens generators and exponents <= max_exp.
inline MonomialIdeal random_ideal(Rng& rng, int n, int max_gens, int max_exp) {
    std::vector<Monomial> gens;
    const int count = uniform(rng, 1, max_gens);
    while (static_cast<int>(gens.size()) < count) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int& x : e) x = uniform(rng, 0, max_exp);
        if (std::any_of(e.begin(), e.end(), [](int x) { return x > 0; })) gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

/// A P_F-primary monomial ideal: a pure power of every variable off F plus a
/// few mixed monomials in those variables below the pure powers.
inline MonomialIdeal random_primary(Rng& rng, int n, Face f, int max_exp) {
    const auto off = (Face::full(n) - f).vertices();
    std::vector<int> tops(static_cast<std::size_t>(n), 0);
    std::vector<Monomial> gens;
    for (int j : off) {
        tops[static_cast<std::size_t>(j - 1)] = uniform(rng, 1, max_exp);
        gens.push_back(Monomial::power(n, j, tops[static_cast<std::size_t>(j - 1)]));
    }
    const int extra = uniform(rng, 0, 2);
    for (int i = 0; i < extra; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int j : off) e[static_cast<std::size_t>(j - 1)] = uniform(rng, 0, tops[static_cast<std::size_t>(j - 1)]);
        if (std::any_of(e.begin(), e.end(), [](int x) { return x > 0; })) gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

enum class ComponentStyle { irreducible, prime_power, general };

/// One component per facet, all in the given style (mixed when `general`).
inline Decomposition random_decomposition(Rng& rng, const Complex& delta, int max_exp, ComponentStyle style) {
    const int n = delta.n();
    std::vector<MonomialIdeal> comps;
    for (Face f : delta.facets()) {
        const int pick = style == ComponentStyle::general ? uniform(rng, 0, 2) : static_cast<int>(style);
        if (pick == 0) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            for (int j : (Face::full(n) - f).vertices()) e[static_cast<std::size_t>(j - 1)] = uniform(rng, 1, max_exp);
            comps.push_back(MonomialIdeal::irreducible(n, f, e));
        } else if (pick == 1) {
            comps.push_back(MonomialIdeal::face_prime_power(n, f, uniform(rng, 1, max_exp)));
        } else {
            comps.push_back(random_primary(rng, n, f, max_exp));
        }
    }
    return Decomposition(delta, std::move(comps));
}

}  // namespace gen
