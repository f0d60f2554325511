// Degree-selected subcomplexes, local cohomology of S/I through Takayama's
// formula, the depth comparison between an unmixed ideal and its radical,
// and a Koszul-homology depth oracle.

#pragma once

#include "rigidepth/field.hpp"
#include "rigidepth/ideals.hpp"
#include "rigidepth/simplicial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rigidepth {

/// Integer degree a in Z^n with its sign supports.
struct DegreeVector {
    std::vector<int> entries;

    /// G_a = {i : a_i < 0}
    Face negative_support() const;
    /// H_a = {i : a_i > 0}
    Face positive_support() const;
};

struct LocalCohomologyCell {
    DegreeVector degree;
    int index = 0;
    std::size_t dimension = 0;
};

/// Facets F (as a bitmask over facet indices) whose component excludes x^a.
std::uint64_t delta_a_facet_mask(const Decomposition& d, std::span<const int> a);

/// Complex generated by the facets whose component excludes x^a, a in N^n.
/// Void when x^a lies in every component.
Complex delta_a_facet_form(const Decomposition& d, std::span<const int> a);

/// Complex of all F \ G_a with G_a <= F <= [n] and x^a outside I S_F.
Complex delta_a_localization_form(const MonomialIdeal& ideal, std::span<const int> a);

/// Whether a in N^n lies in L_Gamma(I): x^a is in every component outside
/// Gamma and in none of Gamma's.
bool in_l_gamma(const Decomposition& d, std::uint64_t gamma_mask, std::span<const int> a);

/// Exhaustive search of the capped grid prod_j {0..cap_j} for a point of
/// L_Gamma(I). Gamma must be a nonempty proper subset of the facets.
std::optional<std::vector<int>> l_gamma_witness(const Decomposition& d,
                                                std::span<const std::size_t> gamma_facets);

/// dim_K H^i_m(S/I)_a via Takayama's formula.
std::size_t takayama_dim(const MonomialIdeal& ideal, int i, std::span<const int> a,
                         const FieldSpec& field);

/// Least i with H^i_m(S/I) != 0, scanning degrees in prod_j {-1..rho_j - 1}.
int depth_via_takayama(const MonomialIdeal& ideal, const FieldSpec& field);

/// Same quantity for an unmixed ideal, computing each degree complex as a
/// link inside the facet-form complex of the nonnegative part of a.
int depth_via_takayama(const Decomposition& d, const FieldSpec& field);

/// Every nonzero graded piece of local cohomology with index <= max_index.
std::vector<LocalCohomologyCell> local_cohomology_table(const MonomialIdeal& ideal,
                                                        const FieldSpec& field, int max_index);

/// n minus the top nonvanishing Koszul homology index of x_1..x_n on S/I,
/// computed degree by degree over prod_j {0..rho_j}.
int koszul_depth_oracle(const MonomialIdeal& ideal, const FieldSpec& field);

struct RadicalDepthVerdict {
    bool equal = true;
    int t = 0;                       // depth K[delta]
    bool degree_condition = true;    // every nonvoid delta_a has depth >= t
    bool subcomplex_condition = true;  // L_Gamma empty for every Gamma of depth < t
    std::optional<std::vector<int>> degree_witness;
    /// Facet indices of the offending Gamma (= delta_a of the witness).
    std::optional<std::vector<std::size_t>> gamma_witness;
    int gamma_depth = 0;
};

/// Decides depth(S/I) = depth(S/sqrt I) from the degree condition over the
/// capped grid, cross-checked by the L_Gamma condition. Throws
/// std::logic_error if the two routes disagree.
RadicalDepthVerdict depth_equals_radical(const Decomposition& d, const FieldSpec& field,
                                         std::size_t facet_cap = 20);

struct CriteriaAudit {
    int t = 0;
    int depth = 0;  // depth(S/I) via local cohomology
    bool depth_condition = false;
    bool degree_condition = false;
    bool subcomplex_condition = false;

    bool consistent() const {
        return depth_condition == degree_condition && degree_condition == subcomplex_condition;
    }
};

/// Computes the three equivalent conditions independently.
CriteriaAudit audit_depth_criteria(const Decomposition& d, const FieldSpec& field);

}  // namespace rigidepth
