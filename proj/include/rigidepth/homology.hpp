// Reduced simplicial homology over Q or F_p, Reisner's Cohen-Macaulay test,
// and depth of Stanley-Reisner rings via the skeleton formula.

#pragma once

#include "rigidepth/field.hpp"
#include "rigidepth/simplicial.hpp"

#include <optional>
#include <vector>

namespace rigidepth {

/// Simplicial boundary map from i-faces to (i-1)-faces.
///
/// Rows and columns follow the colex face order. The entry for (r, c) is
/// (-1)^k when r = c minus its k-th smallest vertex (k counted from 0).
/// For i = 0 the single row is the empty face (the augmentation map).
struct BoundaryMatrix {
    std::vector<Face> row_faces;
    std::vector<Face> col_faces;
    IntMatrix matrix;
};

BoundaryMatrix boundary_matrix(const Complex& delta, int i);

/// dim_K of the reduced homology in degree i (i >= -1).
///
/// The void complex has no homology; the irrelevant complex has a
/// one-dimensional H_{-1} and nothing else.
std::size_t reduced_betti(const Complex& delta, int i, const FieldSpec& field);

/// Reduced Betti numbers for degrees -1..dim; element k is degree k-1.
std::vector<std::size_t> reduced_betti_numbers(const Complex& delta, const FieldSpec& field);

struct CohenMacaulayVerdict {
    bool cohen_macaulay = true;
    /// On failure: a face whose link has homology below its dimension.
    std::optional<Face> violating_face;
    int violating_degree = 0;

    explicit operator bool() const { return cohen_macaulay; }
};

/// Reisner's criterion, checked on the link of every face including {}.
CohenMacaulayVerdict is_cohen_macaulay(const Complex& delta, const FieldSpec& field);

/// depth K[delta] = 1 + max{i : skeleton(delta, i) is Cohen-Macaulay}.
/// Returns 0 for the irrelevant complex; throws for the void complex.
int depth_stanley_reisner(const Complex& delta, const FieldSpec& field);

/// Alternating face count minus one (reduced Euler characteristic).
long long reduced_euler_characteristic(const Complex& delta);

struct HomologyIdentities {
    bool boundary_squares_to_zero = true;
    long long euler_from_faces = 0;
    long long euler_from_betti = 0;

    bool hold() const { return boundary_squares_to_zero && euler_from_faces == euler_from_betti; }
};

/// Checks d_i d_{i+1} = 0 in every degree and the Euler-Poincare identity.
HomologyIdentities check_homology_identities(const Complex& delta, const FieldSpec& field);

}  // namespace rigidepth
