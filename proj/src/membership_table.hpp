// Precomputed monomial membership over a box prod_j {0..cap_j}. Internal.

#pragma once

#include "rigidepth/ideals.hpp"

#include <span>
#include <vector>

namespace rigidepth::detail {

class MembershipTable {
public:
    /// Requires every generator to lie inside the box.
    MembershipTable(const MonomialIdeal& ideal, std::span<const int> caps)
        : caps_(caps.begin(), caps.end()), strides_(caps.size(), 1) {
        std::size_t size = 1;
        for (std::size_t j = caps_.size(); j-- > 0;) {
            strides_[j] = size;
            size *= static_cast<std::size_t>(caps_[j]) + 1;
        }
        member_.assign(size, 0);
        for (const auto& g : ideal.generators()) member_[index(g.exponents())] = 1;
        // Upward closure: b is in the ideal if b - e_j is, for some j.
        std::vector<int> point(caps_.size(), 0);
        for (std::size_t idx = 0; idx < size; ++idx) {
            std::size_t rest = idx;
            for (std::size_t j = 0; j < caps_.size(); ++j) {
                point[j] = static_cast<int>(rest / strides_[j]);
                rest %= strides_[j];
            }
            if (member_[idx]) continue;
            for (std::size_t j = 0; j < caps_.size(); ++j) {
                if (point[j] > 0 && member_[idx - strides_[j]]) {
                    member_[idx] = 1;
                    break;
                }
            }
        }
    }

    /// Membership of x^b for 0 <= b; coordinates above the cap are clamped.
    bool contains(std::span<const int> b) const {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < caps_.size(); ++j) {
            const int v = b[j] < caps_[j] ? b[j] : caps_[j];
            idx += static_cast<std::size_t>(v) * strides_[j];
        }
        return member_[idx] != 0;
    }

private:
    std::size_t index(std::span<const int> b) const {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < caps_.size(); ++j) idx += static_cast<std::size_t>(b[j]) * strides_[j];
        return idx;
    }

    std::vector<int> caps_;
    std::vector<std::size_t> strides_;
    std::vector<unsigned char> member_;
};

inline std::vector<MembershipTable> component_tables(const Decomposition& d) {
    std::vector<MembershipTable> tables;
    for (const auto& comp : d.components()) tables.emplace_back(comp, d.component_caps());
    return tables;
}

}  // namespace rigidepth::detail
