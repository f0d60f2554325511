// Inequality systems on irreducible exponents describing when an unmixed
// ideal has the depth of its radical, as a union of rational cones.

#pragma once

#include "rigidepth/field.hpp"
#include "rigidepth/ideals.hpp"
#include "rigidepth/simplicial.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rigidepth {

/// Exponent of x_var in the irreducible component of facet `facet`.
/// Both indices are 0-based here (facet index into delta.facets(), var = j-1).
struct ExponentSymbol {
    std::size_t facet = 0;
    int var = 0;

    auto operator<=>(const ExponentSymbol&) const = default;
};

enum class Relation { ge, le, eq };

std::string to_string(Relation rel);
/// Parses ">=", "<=" or "=".
Relation parse_relation(const std::string& text);

/// symbols[left] rel symbols[right].
struct Comparison {
    std::size_t left = 0;
    Relation relation = Relation::ge;
    std::size_t right = 0;

    auto operator<=>(const Comparison&) const = default;
};

struct ConeUnion {
    int n = 0;
    std::vector<ExponentSymbol> symbols;  // sorted by (facet, var)
    /// Each disjunct is a conjunction; an empty disjunct is always true and an
    /// empty list of disjuncts is always false.
    std::vector<std::vector<Comparison>> disjuncts;

    bool operator==(const ConeUnion&) const = default;
};

/// All symbols (k, j) with j outside facet k, ordered by facet then variable.
std::vector<ExponentSymbol> exponent_symbols(const Complex& delta);

/// For each proper facet subset Gamma with depth below t and each choice of one
/// variable outside every facet of the complement, at least one complement
/// exponent must reach the matching exponent of a Gamma facet missing that
/// variable. The conjunction is expanded to disjunctive normal form; with
/// `prune`, disjuncts containing another disjunct are removed.
ConeUnion generate_cone_union(const Complex& delta, const FieldSpec& field,
                              std::size_t facet_cap = 20, bool prune = true);

/// `values` aligned with U.symbols. Throws std::invalid_argument on a length
/// mismatch.
bool evaluate(const ConeUnion& u, std::span<const int> values);
/// Throws std::invalid_argument when a symbol of U is missing.
bool evaluate(const ConeUnion& u, const std::map<ExponentSymbol, int>& assignment);

/// Irreducible decomposition whose exponents come from `values` (aligned with
/// exponent_symbols(delta)).
Decomposition decomposition_from_values(const Complex& delta, std::span<const int> values);

/// The 4-cycle with edges {1,2},{2,3},{3,4},{1,4}.
Complex fourcycle_complex();

/// Maps the conventional vector (a1..a8) of
/// (x1^a1,x2^a2) n (x1^a3,x4^a4) n (x2^a5,x3^a6) n (x3^a7,x4^a8)
/// to values aligned with exponent_symbols(fourcycle_complex()).
std::vector<int> fourcycle_values(std::span<const int> a);

Decomposition fourcycle_decomposition(std::span<const int> a);

/// The four hand-derived systems for the 4-cycle:
///   a3<=a1, a2=a5, a7<=a6  |  a2<=a5, a6=a7, a4<=a8
///   a5<=a2, a1=a3, a8<=a4  |  a1<=a3, a4=a8, a6<=a7
ConeUnion fourcycle_reference_system();

struct GridComparison {
    bool equivalent = true;
    std::optional<std::vector<int>> counterexample;
    std::size_t points = 0;
};

/// Compares two unions at every point of {1..bound}^symbols, stopping at the
/// first disagreement. Throws std::invalid_argument on differing symbols.
GridComparison grid_equivalence(const ConeUnion& u1, const ConeUnion& u2, int bound);

struct ConvexityReport {
    std::vector<int> midpoint;
    bool midpoint_satisfies = false;
    bool convexity_fails = false;
};

/// Evaluates U at (p+q)/2. Throws std::invalid_argument when p or q does not
/// satisfy U or a coordinate sum is odd.
ConvexityReport convexity_probe(const ConeUnion& u, std::span<const int> p, std::span<const int> q);

/// One line per disjunct, e.g. "a[1,3] >= a[2,3] and a[4,1] <= a[3,1]", with
/// 1-based facet and variable indices.
std::string format_systems(const ConeUnion& u);

}  // namespace rigidepth
