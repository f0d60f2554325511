// Monomials and monomial ideals in K[x_1..x_n], unmixed decompositions by
// facet, and polarization.

#pragma once

#include "rigidepth/simplicial.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rigidepth {

class Monomial {
public:
    Monomial() = default;
    /// Throws std::invalid_argument on a negative exponent.
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }
    /// x_j^e, 1-based j.
    static Monomial power(int n, int j, int e);
    /// Squarefree monomial x_F.
    static Monomial of_face(int n, Face f);

    int n() const { return static_cast<int>(exponents_.size()); }
    /// Exponent of x_j, 1-based.
    int exponent(int j) const { return exponents_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& exponents() const { return exponents_; }
    Face support() const;
    int degree() const;
    bool is_one() const { return support().empty(); }

    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;

    std::string to_string() const;

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<int> exponents_;
};

class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Keeps the divisibility-minimal generators, sorted. Throws on length
    /// mismatch.
    MonomialIdeal(int n, std::vector<Monomial> generators);
    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
    /// Squarefree ideal generated by x_F over the minimal nonfaces F.
    static MonomialIdeal stanley_reisner(const Complex& delta);
    /// P_F = (x_j : j not in F).
    static MonomialIdeal face_prime(int n, Face f);
    /// (x_j^{e_j} : j not in F); `exponents` is indexed by variable.
    static MonomialIdeal irreducible(int n, Face f, std::span<const int> exponents);
    /// P_F^m.
    static MonomialIdeal face_prime_power(int n, Face f, int m);

    int n() const { return n_; }
    const std::vector<Monomial>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const { return generators_.size() == 1 && generators_.front().is_one(); }
    bool is_squarefree() const;

    /// Stanley-Reisner complex of the radical: faces F with x_F outside it.
    Complex radical_complex() const;

    std::string to_string() const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    int n_ = 0;
    std::vector<Monomial> generators_;
};

bool contains(const MonomialIdeal& ideal, const Monomial& m);
/// Membership of x^a for a nonnegative exponent vector.
bool contains(const MonomialIdeal& ideal, std::span<const int> a);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Largest exponent of x_j (1-based) over the minimal generators.
int rho(const MonomialIdeal& ideal, int j);
std::vector<int> rho_vector(const MonomialIdeal& ideal);

/// Whether x^a lies in I localized at the variables of F; `a` may have
/// negative entries. Coordinates in F are unconstrained.
bool localization_membership(const MonomialIdeal& ideal, std::span<const int> a, Face f);

struct Polarization {
    MonomialIdeal ideal;
    /// origin[k] = (original variable, copy index), both 1-based, for the
    /// k-th new variable (0-based k).
    std::vector<std::pair<int, int>> origin;
};

/// x_j^e becomes x_{j,1}...x_{j,e}; the new ring has sum_j rho_j variables,
/// ordered by original variable, then copy index.
Polarization polarize(const MonomialIdeal& ideal);

/// Unmixed ideal given by one P_F-primary component per facet.
class Decomposition {
public:
    /// Components align with delta.facets(). Throws std::invalid_argument
    /// when delta is not pure or a component is not P_F-primary.
    Decomposition(Complex delta, std::vector<MonomialIdeal> components);

    const Complex& complex() const { return delta_; }
    const std::vector<MonomialIdeal>& components() const { return components_; }
    const MonomialIdeal& component(std::size_t facet_index) const { return components_[facet_index]; }
    int n() const { return delta_.n(); }

    /// Intersection of all components, computed on each call.
    MonomialIdeal intersection() const;

    /// Per-variable cap: max over components of rho_j. Membership in every
    /// component is unchanged by replacing a_j with min(a_j, cap_j), and
    /// cap_j >= rho_j of the intersection.
    const std::vector<int>& component_caps() const { return caps_; }

private:
    Complex delta_;
    std::vector<MonomialIdeal> components_;
    std::vector<int> caps_;
};

struct UnmixedCheck {
    bool valid = true;
    std::optional<std::size_t> offending_facet;
    std::string reason;
};

/// Checks purity and that component k is P_{F_k}-primary: every generator is
/// supported off F_k and each variable off F_k has a pure power.
UnmixedCheck validate_unmixed(const Complex& delta, std::span<const MonomialIdeal> components);

Decomposition build_decomposition(Complex delta, std::vector<MonomialIdeal> components);

/// Decomposition whose components are the irreducible ideals
/// (x_j^{exponents[k][j-1]} : j not in F_k).
Decomposition irreducible_decomposition(const Complex& delta,
                                        const std::vector<std::vector<int>>& exponents);

/// Decomposition with components P_{F_k}^{powers[k]}.
Decomposition prime_power_decomposition(const Complex& delta, std::span<const int> powers);

}  // namespace rigidepth
