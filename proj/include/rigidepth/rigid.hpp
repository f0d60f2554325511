// Rigid depth of pure simplicial complexes: the combinatorial intersection
// test, the subcomplex depth and skeleton tests, sampling audits over
// irreducible and prime-power ideals, and field/skeleton audits.

#pragma once

#include "rigidepth/field.hpp"
#include "rigidepth/ideals.hpp"
#include "rigidepth/simplicial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rigidepth {

inline constexpr std::size_t kDefaultFacetCap = 20;

/// k facets whose common intersection is smaller than t - k + 1.
struct IntersectionViolation {
    std::vector<std::size_t> facet_indices;
    int intersection_size = 0;
};

/// A proper facet subcomplex Gamma with depth K[Gamma] < t.
struct BadSubcomplex {
    std::vector<std::size_t> facet_indices;
    int depth = 0;
};

using RigidCertificate = std::variant<IntersectionViolation, BadSubcomplex>;

struct RigidVerdict {
    bool rigid = true;
    int t = 0;
    std::optional<RigidCertificate> certificate;
};

/// Intersection test: for 1 <= k <= min(r, t), every k facets meet in at
/// least t - k + 1 vertices. Reports the first violation (increasing k,
/// lexicographic indices).
RigidVerdict is_rigid_f(const Complex& delta, int t);

/// Every nonempty proper facet subcomplex has depth >= depth K[delta].
RigidVerdict is_rigid_d(const Complex& delta, const FieldSpec& field,
                        std::size_t facet_cap = kDefaultFacetCap);

/// Every nonempty proper facet subcomplex has a Cohen-Macaulay (t-1)-skeleton.
RigidVerdict is_rigid_e(const Complex& delta, const FieldSpec& field,
                        std::size_t facet_cap = kDefaultFacetCap);

/// Re-checks a failing verdict's certificate against delta.
bool certificate_holds(const Complex& delta, const RigidVerdict& verdict, const FieldSpec& field);

/// depth of the complex on two facets F, G: |F n G| + 1.
int two_facet_depth(Face f, Face g);

/// Unmixed ideal with (x_i^2 : i not in F) on Gamma's facets and P_F elsewhere;
/// its depth falls below t whenever Gamma does.
Decomposition squared_component_decomposition(const Complex& delta,
                                              const std::vector<std::size_t>& gamma_facets);

struct SampledIdeal {
    std::string kind;  // "irreducible" or "prime-power"
    std::vector<std::vector<int>> exponents;  // per facet: exponents by variable, or {m}
    int depth = 0;
};

struct SamplingReport {
    int t = 0;
    int irreducible_samples = 0;
    int prime_power_samples = 0;
    /// Samples with depth != t.
    std::vector<SampledIdeal> mismatches;
};

/// Draws `trials` random irreducible decompositions (exponents in
/// 1..exponent_bound) and `trials` prime-power decompositions (powers in
/// 1..exponent_bound) with a seeded generator and compares their depth to t.
SamplingReport sample_rigidity_bc(const Complex& delta, const FieldSpec& field, int exponent_bound,
                                  int trials, std::uint64_t seed);

struct FieldAuditEntry {
    FieldSpec field = FieldSpec::rationals();
    int depth = 0;
    bool rigid = false;
};

struct CharacteristicReport {
    FieldAuditEntry rationals;
    std::vector<FieldAuditEntry> primes;
    /// Descriptions of violated expectations (empty when consistent).
    std::vector<std::string> violations;
};

/// Rigid over Q must imply rigid over each F_p, and depth over Q must be
/// at least depth over each F_p.
CharacteristicReport char_independence_audit(const Complex& delta, const std::vector<std::int64_t>& primes,
                                             std::size_t facet_cap = kDefaultFacetCap);

struct SkeletonLevel {
    int i = 0;
    int depth = 0;
    bool rigid = false;
};

struct SkeletonReport {
    int t = 0;
    std::vector<SkeletonLevel> levels;  // i = t-1 .. dim
    std::optional<int> first_non_rigid;
    std::vector<std::string> violations;
};

/// For i >= t-1: depth of the i-skeleton equals t, and once a skeleton is
/// rigid every higher skeleton is too. Throws std::invalid_argument when
/// delta itself is not rigid.
SkeletonReport skeleton_propagation_audit(const Complex& delta, const FieldSpec& field);

}  // namespace rigidepth
