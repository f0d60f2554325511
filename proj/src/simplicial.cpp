#include "rigidepth/simplicial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rigidepth {

namespace {

void check_vertex(int v) {
    if (v < 1 || v > kMaxVertices) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(kMaxVertices));
    }
}

// Spreads the low bits of `compact` onto the set bits of `ground`.
std::uint64_t deposit(std::uint64_t compact, const std::vector<int>& positions) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if ((compact >> i) & 1U) out |= std::uint64_t{1} << positions[i];
    }
    return out;
}

void sort_unique(std::vector<Face>& faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

}  // namespace

Face::Face(std::initializer_list<int> vertices) {
    for (int v : vertices) {
        check_vertex(v);
        bits_ |= std::uint64_t{1} << (v - 1);
    }
}

Face Face::from_vertices(std::span<const int> vertices) {
    std::uint64_t bits = 0;
    for (int v : vertices) {
        check_vertex(v);
        bits |= std::uint64_t{1} << (v - 1);
    }
    return Face(bits);
}

Face Face::full(int n) {
    if (n < 0 || n > kMaxVertices) throw std::out_of_range("vertex count out of range");
    return Face(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string Face::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : vertices()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<Face> subsets_of_size(Face ground, int k) {
    std::vector<Face> out;
    const int m = ground.size();
    if (k < 0 || k > m) return out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> positions;
    for (int v : ground.vertices()) positions.push_back(v - 1);
    // Gosper's hack walks k-bit words in increasing order; deposit is monotone.
    std::uint64_t word = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = (m == 64) ? 0 : (std::uint64_t{1} << m);
    while (true) {
        out.emplace_back(deposit(word, positions));
        const std::uint64_t c = word & (~word + 1);
        const std::uint64_t r = word + c;
        if (r == 0) break;
        word = (((r ^ word) >> 2) / c) | r;
        if (limit != 0 && word >= limit) break;
        if (limit == 0 && r < c) break;
    }
    return out;
}

Complex::Complex(int n, std::vector<Face> facets) : n_(n), facets_(std::move(facets)) {
    if (facets_.empty()) {
        kind_ = ComplexKind::void_complex;
    } else if (facets_.size() == 1 && facets_.front().empty()) {
        kind_ = ComplexKind::irrelevant;
    } else {
        kind_ = ComplexKind::ordinary;
    }
}

Complex Complex::from_facets(int n, std::vector<Face> candidates) {
    if (n < 1 || n > kMaxVertices) {
        throw std::out_of_range("vertex count must lie in 1.." + std::to_string(kMaxVertices));
    }
    const Face ground = Face::full(n);
    for (Face f : candidates) {
        if (!f.is_subset_of(ground)) {
            throw std::out_of_range("face " + f.to_string() + " has a vertex outside 1.." +
                                    std::to_string(n));
        }
    }
    sort_unique(candidates);
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
            dominated = j != i && candidates[i].is_subset_of(candidates[j]);
        }
        if (!dominated) maximal.push_back(candidates[i]);
    }
    return Complex(n, std::move(maximal));
}

Complex Complex::void_complex(int n) { return from_facets(n, {}); }

Complex Complex::simplex(int n, Face facet) { return from_facets(n, {facet}); }

int Complex::dimension() const {
    if (kind_ == ComplexKind::void_complex) return -2;
    int best = 0;
    for (Face f : facets_) best = std::max(best, f.size());
    return best - 1;
}

bool Complex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](Face f) { return f.size() == facets_.front().size(); });
}

bool Complex::contains(Face f) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return f.is_subset_of(g); });
}

std::vector<Face> Complex::faces(int i) const {
    std::vector<Face> out;
    for (Face f : facets_) {
        auto sub = subsets_of_size(f, i + 1);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    sort_unique(out);
    return out;
}

std::vector<Face> Complex::all_faces() const {
    std::vector<Face> out;
    for (int i = -1; i <= dimension(); ++i) {
        auto level = faces(i);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Face Complex::vertex_support() const {
    Face out;
    for (Face f : facets_) out = out | f;
    return out;
}

std::string Complex::to_string() const {
    if (kind_ == ComplexKind::void_complex) return "<void>";
    std::string out = "<";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (i) out += ' ';
        out += facets_[i].to_string();
    }
    return out + ">";
}

Complex skeleton(const Complex& delta, int i) {
    if (i < -1 || i > delta.dimension()) {
        throw std::out_of_range("skeleton index " + std::to_string(i) + " outside -1.." +
                                std::to_string(delta.dimension()));
    }
    std::vector<Face> candidates;
    for (Face f : delta.facets()) {
        if (f.dim() <= i) {
            candidates.push_back(f);
        } else {
            auto sub = subsets_of_size(f, i + 1);
            candidates.insert(candidates.end(), sub.begin(), sub.end());
        }
    }
    return Complex::from_facets(delta.n(), std::move(candidates));
}

Complex star(const Complex& delta, Face f) {
    if (!delta.contains(f)) {
        throw std::invalid_argument("star: " + f.to_string() + " is not a face");
    }
    std::vector<Face> candidates;
    for (Face g : delta.facets()) {
        if (f.is_subset_of(g)) candidates.push_back(g);
    }
    return Complex::from_facets(delta.n(), std::move(candidates));
}

Complex link(const Complex& delta, Face f) {
    if (!delta.contains(f)) {
        throw std::invalid_argument("link: " + f.to_string() + " is not a face");
    }
    std::vector<Face> candidates;
    for (Face g : delta.facets()) {
        if (f.is_subset_of(g)) candidates.push_back(g - f);
    }
    return Complex::from_facets(delta.n(), std::move(candidates));
}

Complex facet_subcomplex(const Complex& delta, std::span<const std::size_t> indices) {
    if (indices.empty()) throw std::invalid_argument("facet_subcomplex: empty selection");
    std::vector<Face> chosen;
    for (std::size_t idx : indices) {
        if (idx >= delta.facet_count()) {
            throw std::out_of_range("facet index " + std::to_string(idx) + " out of range");
        }
        chosen.push_back(delta.facets()[idx]);
    }
    return Complex::from_facets(delta.n(), std::move(chosen));
}

Complex facet_subcomplex_mask(const Complex& delta, std::uint64_t mask) {
    std::vector<std::size_t> indices;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) {
        indices.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return facet_subcomplex(delta, indices);
}

}  // namespace rigidepth
