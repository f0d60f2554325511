// Odometer over integer boxes. Internal to the library.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidepth/simplicial.hpp"

namespace rigidepth::detail {

/// Calls visit(point) for every point of prod_j [lo_j, hi_j], last coordinate
/// fastest. Stops early when visit returns false; returns false in that case.
/// An empty range in any coordinate visits nothing.
template <typename Visit>
bool for_each_in_box(std::span<const int> lo, std::span<const int> hi, Visit&& visit) {
    const std::size_t n = lo.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (lo[j] > hi[j]) return true;
    }
    std::vector<int> point(lo.begin(), lo.end());
    while (true) {
        if (!visit(std::span<const int>(point))) return false;
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (point[j] < hi[j]) {
                ++point[j];
                break;
            }
            point[j] = lo[j];
            if (j == 0) return true;
        }
        if (n == 0) return true;
    }
}

inline std::vector<std::size_t> mask_indices(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

/// Nonempty proper subsets of r facets as masks: increasing cardinality, then
/// lexicographic on indices. Throws std::length_error when r exceeds cap.
inline std::vector<std::uint64_t> proper_subset_masks(std::size_t r, std::size_t cap) {
    if (r > cap || r > 62) {
        throw std::length_error("facet count " + std::to_string(r) + " exceeds enumeration cap " +
                                std::to_string(cap));
    }
    std::vector<std::uint64_t> out;
    const Face all = Face::full(static_cast<int>(r));
    for (int k = 1; k < static_cast<int>(r); ++k) {
        auto level = subsets_of_size(all, k);
        std::sort(level.begin(), level.end(), [](Face a, Face b) { return a.vertices() < b.vertices(); });
        for (Face f : level) out.push_back(f.bits());
    }
    return out;
}

}  // namespace rigidepth::detail
