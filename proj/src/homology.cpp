#include "rigidepth/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace rigidepth {

BoundaryMatrix boundary_matrix(const Complex& delta, int i) {
    if (i < 0) throw std::out_of_range("boundary_matrix: degree must be >= 0");
    BoundaryMatrix out;
    out.row_faces = delta.faces(i - 1);
    out.col_faces = delta.faces(i);
    out.matrix = IntMatrix(out.row_faces.size(), out.col_faces.size());
    for (std::size_t c = 0; c < out.col_faces.size(); ++c) {
        const Face col = out.col_faces[c];
        int position = 0;
        for (int v : col.vertices()) {
            const Face boundary = col - Face{v};
            auto it = std::lower_bound(out.row_faces.begin(), out.row_faces.end(), boundary);
            const auto r = static_cast<std::size_t>(it - out.row_faces.begin());
            out.matrix.at(r, c) = (position % 2 == 0) ? 1 : -1;
            ++position;
        }
    }
    return out;
}

std::vector<std::size_t> reduced_betti_numbers(const Complex& delta, const FieldSpec& field) {
    if (delta.is_void()) return {};
    const int dim = delta.dimension();
    // ranks[k] = rank of the boundary map out of degree k-1, k = 0..dim+2.
    std::vector<std::size_t> face_counts;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 3, 0);
    for (int i = -1; i <= dim; ++i) face_counts.push_back(delta.faces(i).size());
    for (int i = 0; i <= dim; ++i) {
        ranks[static_cast<std::size_t>(i) + 1] = rank(boundary_matrix(delta, i).matrix, field);
    }
    std::vector<std::size_t> betti;
    for (int i = -1; i <= dim; ++i) {
        const auto k = static_cast<std::size_t>(i + 1);
        betti.push_back(face_counts[k] - ranks[k] - ranks[k + 1]);
    }
    return betti;
}

std::size_t reduced_betti(const Complex& delta, int i, const FieldSpec& field) {
    if (i < -1) throw std::out_of_range("reduced_betti: degree must be >= -1");
    const auto betti = reduced_betti_numbers(delta, field);
    const auto k = static_cast<std::size_t>(i + 1);
    return k < betti.size() ? betti[k] : 0;
}

CohenMacaulayVerdict is_cohen_macaulay(const Complex& delta, const FieldSpec& field) {
    if (delta.is_void()) throw std::invalid_argument("is_cohen_macaulay: void complex");
    CohenMacaulayVerdict verdict;
    for (Face f : delta.all_faces()) {
        const Complex lk = link(delta, f);
        const auto betti = reduced_betti_numbers(lk, field);
        const int dim = lk.dimension();
        for (int i = -1; i < dim; ++i) {
            if (betti[static_cast<std::size_t>(i + 1)] != 0) {
                verdict.cohen_macaulay = false;
                verdict.violating_face = f;
                verdict.violating_degree = i;
                return verdict;
            }
        }
    }
    return verdict;
}

int depth_stanley_reisner(const Complex& delta, const FieldSpec& field) {
    if (delta.is_void()) throw std::invalid_argument("depth_stanley_reisner: void complex");
    if (delta.kind() == ComplexKind::irrelevant) return 0;
    for (int i = delta.dimension(); i > 0; --i) {
        if (is_cohen_macaulay(skeleton(delta, i), field)) return i + 1;
    }
    // Every nonvoid 0-dimensional complex is Cohen-Macaulay.
    return 1;
}

long long reduced_euler_characteristic(const Complex& delta) {
    if (delta.is_void()) return 0;
    long long chi = 0;
    for (int i = -1; i <= delta.dimension(); ++i) {
        const auto count = static_cast<long long>(delta.faces(i).size());
        chi += (i % 2 == 0) ? count : -count;
    }
    return chi;
}

HomologyIdentities check_homology_identities(const Complex& delta, const FieldSpec& field) {
    HomologyIdentities out;
    if (delta.is_void()) return out;
    for (int i = 1; i <= delta.dimension(); ++i) {
        const auto lower = boundary_matrix(delta, i - 1);
        const auto upper = boundary_matrix(delta, i);
        if (!is_zero(multiply(lower.matrix, upper.matrix))) out.boundary_squares_to_zero = false;
    }
    out.euler_from_faces = reduced_euler_characteristic(delta);
    const auto betti = reduced_betti_numbers(delta, field);
    for (std::size_t k = 0; k < betti.size(); ++k) {
        const auto b = static_cast<long long>(betti[k]);
        out.euler_from_betti += (k % 2 == 1) ? b : -b;
    }
    return out;
}

}  // namespace rigidepth
