// Brute-force reference computations for tests. Nothing here calls the
// library's algorithms; Face and Complex are used only as containers.

#pragma once

#include "rigidepth/simplicial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using rigidepth::Complex;
using rigidepth::Face;
using Rational = boost::multiprecision::cpp_rational;

/// Every subset of {1..n} lying in some facet, by brute force over 2^n masks.
inline std::set<std::uint64_t> face_set(const Complex& c) {
    std::set<std::uint64_t> out;
    const std::uint64_t limit = std::uint64_t{1} << c.n();
    for (std::uint64_t s = 0; s < limit; ++s) {
        for (Face f : c.facets()) {
            if ((s & ~f.bits()) == 0) {
                out.insert(s);
                break;
            }
        }
    }
    return out;
}

inline std::vector<std::uint64_t> faces_of_size(const std::set<std::uint64_t>& faces, int size) {
    std::vector<std::uint64_t> out;
    for (auto s : faces) {
        if (std::popcount(s) == size) out.push_back(s);
    }
    return out;
}

/// Rank over Q (p == 0) by Gaussian elimination on rationals, or over F_p.
inline std::size_t rank(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    if (p == 0) {
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t piv = r;
            while (piv < rows && a[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(a[piv], a[r]);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || a[i][c] == 0) continue;
                const Rational factor = a[i][c] / a[r][c];
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
            }
            ++r;
        }
        return r;
    }
    auto mod = [p](long long x) { return ((x % p) + p) % p; };
    auto inverse = [&](long long x) {
        long long result = 1, base = x, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    for (auto& row : m)
        for (auto& x : row) x = mod(x);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const long long inv = inverse(m[r][c]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const long long factor = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = mod(m[i][j] - factor * m[r][j]);
        }
        ++r;
    }
    return r;
}

/// Boundary from faces of `size` to faces of `size - 1`, sign (-1)^position.
inline std::vector<std::vector<long long>> boundary(const std::set<std::uint64_t>& faces, int size) {
    const auto cols = faces_of_size(faces, size);
    const auto rows = faces_of_size(faces, size - 1);
    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int position = 0;
        for (int v = 0; v < 64; ++v) {
            if (!((cols[c] >> v) & 1U)) continue;
            const auto target = cols[c] & ~(std::uint64_t{1} << v);
            const auto it = std::find(rows.begin(), rows.end(), target);
            m[static_cast<std::size_t>(it - rows.begin())][c] = (position % 2 == 0) ? 1 : -1;
            ++position;
        }
    }
    return m;
}

/// Reduced Betti numbers of a face set; element k is degree k - 1.
inline std::vector<std::size_t> betti(const std::set<std::uint64_t>& faces, long long p) {
    if (faces.empty()) return {};
    int top = 0;
    for (auto s : faces) top = std::max(top, std::popcount(s));
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);  // ranks[s]: boundary out of size s
    for (int s = 1; s <= top; ++s) ranks[static_cast<std::size_t>(s)] = rank(boundary(faces, s), p);
    std::vector<std::size_t> out;
    for (int s = 0; s <= top; ++s) {
        const std::size_t f = faces_of_size(faces, s).size();
        out.push_back(f - ranks[static_cast<std::size_t>(s)] - ranks[static_cast<std::size_t>(s) + 1]);
    }
    return out;
}

inline std::vector<std::size_t> betti(const Complex& c, long long p) { return betti(face_set(c), p); }

inline std::set<std::uint64_t> link(const std::set<std::uint64_t>& faces, std::uint64_t f) {
    std::set<std::uint64_t> out;
    for (auto g : faces) {
        if ((g & f) == 0 && faces.count(g | f)) out.insert(g);
    }
    return out;
}

inline std::set<std::uint64_t> skeleton(const std::set<std::uint64_t>& faces, int dim) {
    std::set<std::uint64_t> out;
    for (auto g : faces) {
        if (std::popcount(g) <= dim + 1) out.insert(g);
    }
    return out;
}

inline int dimension(const std::set<std::uint64_t>& faces) {
    int top = 0;
    for (auto s : faces) top = std::max(top, std::popcount(s));
    return top - 1;
}

/// Reisner's criterion over all faces.
inline bool cohen_macaulay(const std::set<std::uint64_t>& faces, long long p) {
    for (auto f : faces) {
        const auto lk = link(faces, f);
        const auto b = betti(lk, p);
        const int d = dimension(lk);
        for (int i = -1; i < d; ++i) {
            if (b[static_cast<std::size_t>(i + 1)] != 0) return false;
        }
    }
    return true;
}

/// 1 + the largest i with a Cohen-Macaulay i-skeleton; 0 for {{}}.
inline int depth(const Complex& c, long long p) {
    const auto faces = face_set(c);
    for (int i = dimension(faces); i >= 0; --i) {
        if (cohen_macaulay(skeleton(faces, i), p)) return i + 1;
    }
    return 0;
}

/// x^a lies in the ideal generated by `gens` (exponent vectors).
inline bool member(const std::vector<std::vector<int>>& gens, const std::vector<int>& a) {
    for (const auto& g : gens) {
        bool divides = true;
        for (std::size_t j = 0; j < g.size(); ++j) divides = divides && g[j] <= a[j];
        if (divides) return true;
    }
    return false;
}

}  // namespace oracle
