// Simplicial complexes on the vertex set {1..n}, stored by their facets.
//
// Faces are bitmasks over at most 64 vertices. Vertex v occupies bit v-1, so
// numeric order on the mask is the colexicographic order on faces; every
// face listing produced here is sorted that way.

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rigidepth {

inline constexpr int kMaxVertices = 64;

class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
    Face(std::initializer_list<int> vertices);

    /// Builds a face from 1-based vertex labels; throws std::out_of_range
    /// for labels outside {1..64}.
    static Face from_vertices(std::span<const int> vertices);

    /// Vertices 1..n.
    static Face full(int n);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dim() const { return size() - 1; }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
    constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

    /// Largest vertex label, 0 for the empty face.
    constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }

    constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
    constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
    constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }

    std::vector<int> vertices() const;
    std::string to_string() const;

    constexpr bool operator==(const Face&) const = default;
    constexpr auto operator<=>(const Face& o) const { return bits_ <=> o.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// All k-element subsets of `ground`, colex order.
std::vector<Face> subsets_of_size(Face ground, int k);

enum class ComplexKind {
    void_complex,  // no faces at all
    irrelevant,    // the single face {}
    ordinary,
};

class Complex {
public:
    /// The complex generated by the inclusion-maximal members of `candidates`.
    /// An empty candidate list yields the void complex.
    static Complex from_facets(int n, std::vector<Face> candidates);
    static Complex void_complex(int n);
    static Complex simplex(int n, Face facet);

    int n() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }
    ComplexKind kind() const { return kind_; }
    bool is_void() const { return kind_ == ComplexKind::void_complex; }

    /// Max facet size minus one; -1 for the irrelevant complex and -2 for
    /// the void complex.
    int dimension() const;
    bool is_pure() const;
    bool contains(Face f) const;

    /// Faces of dimension i, colex order. i = -1 gives {} for nonvoid complexes.
    std::vector<Face> faces(int i) const;
    std::vector<Face> all_faces() const;
    /// Union of all facets.
    Face vertex_support() const;

    std::string to_string() const;

    bool operator==(const Complex&) const = default;

private:
    Complex(int n, std::vector<Face> facets);

    int n_ = 1;
    std::vector<Face> facets_;
    ComplexKind kind_ = ComplexKind::void_complex;
};

/// Faces of dimension <= i. Requires -1 <= i <= dim.
Complex skeleton(const Complex& delta, int i);

/// {G : F u G in delta, F n G = {}}. Throws std::invalid_argument when F is
/// not a face.
Complex link(const Complex& delta, Face f);

/// {G : F u G in delta}.
Complex star(const Complex& delta, Face f);

/// Complex generated by the facets at the given (0-based) indices.
Complex facet_subcomplex(const Complex& delta, std::span<const std::size_t> indices);

/// Same, selecting facets by bitmask over facet indices (r <= 64).
Complex facet_subcomplex_mask(const Complex& delta, std::uint64_t mask);

}  // namespace rigidepth
