#include "rigidepth/criteria.hpp"

#include "grid.hpp"
#include "membership_table.hpp"
#include "rigidepth/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace rigidepth {

namespace {

void require_length(std::span<const int> a, int n, const char* what) {
    if (static_cast<int>(a.size()) != n) {
        throw std::invalid_argument(std::string(what) + ": degree has " + std::to_string(a.size()) +
                                    " entries, expected " + std::to_string(n));
    }
}

void require_proper_ideal(const MonomialIdeal& ideal, const char* what) {
    if (ideal.is_zero() || ideal.is_unit()) {
        throw std::invalid_argument(std::string(what) + ": ideal must be nonzero and proper");
    }
}

Face negative_support_of(std::span<const int> a) {
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < 0) bits |= std::uint64_t{1} << j;
    }
    return Face(bits);
}

// G is a face of the radical's complex iff no generator is supported inside G.
bool is_radical_face(const MonomialIdeal& ideal, Face g) {
    return std::none_of(ideal.generators().begin(), ideal.generators().end(),
                        [&](const Monomial& u) { return u.support().is_subset_of(g); });
}

// Reduced Betti numbers memoized by facet list.
class BettiCache {
public:
    explicit BettiCache(const FieldSpec& field) : field_(field) {}

    const std::vector<std::size_t>& get(const Complex& c) {
        auto it = cache_.find(c.facets());
        if (it == cache_.end()) it = cache_.emplace(c.facets(), reduced_betti_numbers(c, field_)).first;
        return it->second;
    }

private:
    FieldSpec field_;
    std::map<std::vector<Face>, std::vector<std::size_t>> cache_;
};

// Smallest local cohomology index contributed by one degree, or `bound` if
// none below it. betti[k] is reduced homology in degree k-1.
int lowest_index(const std::vector<std::size_t>& betti, int g_size, int bound) {
    for (std::size_t k = 0; k < betti.size(); ++k) {
        const int i = static_cast<int>(k) + g_size;
        if (i >= bound) break;
        if (betti[k] != 0) return i;
    }
    return bound;
}

std::vector<int> takayama_lo(int n) { return std::vector<int>(static_cast<std::size_t>(n), -1); }

std::vector<int> takayama_hi(const MonomialIdeal& ideal) {
    auto hi = rho_vector(ideal);
    for (int& v : hi) v -= 1;
    return hi;
}

// Facet-subset depths, memoized by mask.
class SubcomplexDepths {
public:
    SubcomplexDepths(const Complex& delta, const FieldSpec& field) : delta_(delta), field_(field) {}

    int get(std::uint64_t mask) {
        auto it = cache_.find(mask);
        if (it == cache_.end()) {
            it = cache_.emplace(mask, depth_stanley_reisner(facet_subcomplex_mask(delta_, mask), field_)).first;
        }
        return it->second;
    }

private:
    const Complex& delta_;
    FieldSpec field_;
    std::unordered_map<std::uint64_t, int> cache_;
};

}  // namespace

Face DegreeVector::negative_support() const { return negative_support_of(entries); }

Face DegreeVector::positive_support() const {
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < entries.size(); ++j) {
        if (entries[j] > 0) bits |= std::uint64_t{1} << j;
    }
    return Face(bits);
}

std::uint64_t delta_a_facet_mask(const Decomposition& d, std::span<const int> a) {
    require_length(a, d.n(), "delta_a");
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < d.components().size(); ++k) {
        if (!contains(d.component(k), a)) mask |= std::uint64_t{1} << k;
    }
    return mask;
}

Complex delta_a_facet_form(const Decomposition& d, std::span<const int> a) {
    require_length(a, d.n(), "delta_a_facet_form");
    if (std::any_of(a.begin(), a.end(), [](int v) { return v < 0; })) {
        throw std::invalid_argument("delta_a_facet_form: degree must be nonnegative");
    }
    const auto mask = delta_a_facet_mask(d, a);
    if (mask == 0) return Complex::void_complex(d.n());
    return facet_subcomplex_mask(d.complex(), mask);
}

Complex delta_a_localization_form(const MonomialIdeal& ideal, std::span<const int> a) {
    const int n = ideal.n();
    require_length(a, n, "delta_a_localization_form");
    const Face g = negative_support_of(a);
    // x^a lies in I S_F iff some generator's excess set {j : nu_j(u) > a_j}
    // is inside F, so the faces F \ G are the independent sets of the excess
    // sets minus G, with the vertices of G removed.
    std::vector<Monomial> blockers;
    for (const auto& u : ideal.generators()) {
        std::uint64_t excess = 0;
        for (int j = 1; j <= n; ++j) {
            if (u.exponent(j) > a[static_cast<std::size_t>(j - 1)]) excess |= std::uint64_t{1} << (j - 1);
        }
        blockers.push_back(Monomial::of_face(n, Face(excess) - g));
    }
    for (int v : g.vertices()) blockers.push_back(Monomial::power(n, v, 1));
    return MonomialIdeal(n, std::move(blockers)).radical_complex();
}

bool in_l_gamma(const Decomposition& d, std::uint64_t gamma_mask, std::span<const int> a) {
    for (std::size_t k = 0; k < d.components().size(); ++k) {
        const bool in_gamma = (gamma_mask >> k) & 1U;
        if (contains(d.component(k), a) == in_gamma) return false;
    }
    return true;
}

std::optional<std::vector<int>> l_gamma_witness(const Decomposition& d,
                                                std::span<const std::size_t> gamma_facets) {
    const std::size_t r = d.complex().facet_count();
    std::uint64_t mask = 0;
    for (std::size_t idx : gamma_facets) {
        if (idx >= r) throw std::out_of_range("l_gamma_witness: facet index out of range");
        mask |= std::uint64_t{1} << idx;
    }
    if (mask == 0 || std::popcount(mask) == static_cast<int>(r)) {
        throw std::invalid_argument("l_gamma_witness: Gamma must be a nonempty proper facet subset");
    }
    std::optional<std::vector<int>> witness;
    const std::vector<int> lo(static_cast<std::size_t>(d.n()), 0);
    detail::for_each_in_box(lo, d.component_caps(), [&](std::span<const int> a) {
        if (!in_l_gamma(d, mask, a)) return true;
        witness.emplace(a.begin(), a.end());
        return false;
    });
    return witness;
}

std::size_t takayama_dim(const MonomialIdeal& ideal, int i, std::span<const int> a,
                         const FieldSpec& field) {
    require_proper_ideal(ideal, "takayama_dim");
    require_length(a, ideal.n(), "takayama_dim");
    if (i < 0) return 0;
    const Face g = negative_support_of(a);
    if (!is_radical_face(ideal, g)) return 0;
    for (int j = 1; j <= ideal.n(); ++j) {
        if (a[static_cast<std::size_t>(j - 1)] >= rho(ideal, j)) return 0;
    }
    const int degree = i - g.size() - 1;
    if (degree < -1) return 0;
    return reduced_betti(delta_a_localization_form(ideal, a), degree, field);
}

int depth_via_takayama(const MonomialIdeal& ideal, const FieldSpec& field) {
    require_proper_ideal(ideal, "depth_via_takayama");
    const int n = ideal.n();
    BettiCache cache(field);
    // Local cohomology vanishes above n, so n + 1 means "nothing found yet".
    int best = n + 1;
    detail::for_each_in_box(takayama_lo(n), takayama_hi(ideal), [&](std::span<const int> a) {
        const Face g = negative_support_of(a);
        if (g.size() >= best || !is_radical_face(ideal, g)) return true;
        const Complex da = delta_a_localization_form(ideal, a);
        if (da.is_void()) return true;
        best = std::min(best, lowest_index(cache.get(da), g.size(), best));
        return best > 0;
    });
    if (best > n) throw std::logic_error("depth_via_takayama: no nonvanishing local cohomology found");
    return best;
}

int depth_via_takayama(const Decomposition& d, const FieldSpec& field) {
    const int n = d.n();
    const Complex& delta = d.complex();
    const auto tables = detail::component_tables(d);
    // When a_j >= rho_j(I) the degree complex is a cone over j or void, so the
    // grid may run up to the component caps, which bound rho_j(I) from above.
    std::vector<int> hi = d.component_caps();
    for (int& v : hi) v -= 1;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::size_t>> cache;
    std::vector<int> positive(static_cast<std::size_t>(n));
    int best = n + 1;
    detail::for_each_in_box(takayama_lo(n), hi, [&](std::span<const int> a) {
        const Face g = negative_support_of(a);
        if (g.size() >= best) return true;
        for (std::size_t j = 0; j < a.size(); ++j) positive[j] = std::max(a[j], 0);
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < delta.facet_count(); ++k) {
            if (g.is_subset_of(delta.facets()[k]) && !tables[k].contains(positive)) {
                mask |= std::uint64_t{1} << k;
            }
        }
        if (mask == 0) return true;
        auto key = std::make_pair(mask, g.bits());
        auto it = cache.find(key);
        if (it == cache.end()) {
            std::vector<Face> facets;
            for (std::size_t k : detail::mask_indices(mask)) facets.push_back(delta.facets()[k] - g);
            it = cache.emplace(key, reduced_betti_numbers(Complex::from_facets(n, std::move(facets)), field)).first;
        }
        best = std::min(best, lowest_index(it->second, g.size(), best));
        return best > 0;
    });
    if (best > n) throw std::logic_error("depth_via_takayama: no nonvanishing local cohomology found");
    return best;
}

std::vector<LocalCohomologyCell> local_cohomology_table(const MonomialIdeal& ideal,
                                                        const FieldSpec& field, int max_index) {
    require_proper_ideal(ideal, "local_cohomology_table");
    const int n = ideal.n();
    BettiCache cache(field);
    std::vector<LocalCohomologyCell> cells;
    detail::for_each_in_box(takayama_lo(n), takayama_hi(ideal), [&](std::span<const int> a) {
        const Face g = negative_support_of(a);
        if (!is_radical_face(ideal, g)) return true;
        const Complex da = delta_a_localization_form(ideal, a);
        if (da.is_void()) return true;
        const auto& betti = cache.get(da);
        for (std::size_t k = 0; k < betti.size(); ++k) {
            const int i = static_cast<int>(k) + g.size();
            if (i > max_index || betti[k] == 0) continue;
            cells.push_back({DegreeVector{{a.begin(), a.end()}}, i, betti[k]});
        }
        return true;
    });
    std::stable_sort(cells.begin(), cells.end(),
                     [](const LocalCohomologyCell& x, const LocalCohomologyCell& y) { return x.index < y.index; });
    return cells;
}

int koszul_depth_oracle(const MonomialIdeal& ideal, const FieldSpec& field) {
    require_proper_ideal(ideal, "koszul_depth_oracle");
    const int n = ideal.n();
    const std::vector<int> lo(static_cast<std::size_t>(n), 0);
    const auto hi = rho_vector(ideal);
    int top = -1;
    std::vector<int> shifted(static_cast<std::size_t>(n));
    detail::for_each_in_box(lo, hi, [&](std::span<const int> b) {
        // Basis of the Koszul complex in degree b: subsets T of supp(b) with
        // x^(b - T) nonzero in S/I, grouped by |T|.
        Face support;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] > 0) support = support | Face(std::uint64_t{1} << j);
        }
        std::vector<std::vector<Face>> basis(static_cast<std::size_t>(support.size()) + 1);
        for (int k = 0; k <= support.size(); ++k) {
            for (Face t : subsets_of_size(support, k)) {
                for (std::size_t j = 0; j < b.size(); ++j) shifted[j] = b[j] - (t.contains(static_cast<int>(j) + 1) ? 1 : 0);
                if (!contains(ideal, shifted)) basis[static_cast<std::size_t>(k)].push_back(t);
            }
        }
        // ranks[k] = rank of the differential out of homological degree k.
        std::vector<std::size_t> ranks(basis.size() + 1, 0);
        for (std::size_t k = 1; k < basis.size(); ++k) {
            const auto& cols = basis[k];
            const auto& rows = basis[k - 1];
            if (cols.empty() || rows.empty()) continue;
            IntMatrix m(rows.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                int position = 0;
                for (int v : cols[c].vertices()) {
                    const Face target = cols[c] - Face{v};
                    auto it = std::lower_bound(rows.begin(), rows.end(), target);
                    if (it != rows.end() && *it == target) {
                        m.at(static_cast<std::size_t>(it - rows.begin()), c) = (position % 2 == 0) ? 1 : -1;
                    }
                    ++position;
                }
            }
            ranks[k] = rank(m, field);
        }
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const std::size_t h = basis[k].size() - ranks[k] - ranks[k + 1];
            if (h != 0) top = std::max(top, static_cast<int>(k));
        }
        return true;
    });
    if (top < 0) throw std::logic_error("koszul_depth_oracle: no nonvanishing Koszul homology");
    return n - top;
}

RadicalDepthVerdict depth_equals_radical(const Decomposition& d, const FieldSpec& field,
                                         std::size_t facet_cap) {
    const Complex& delta = d.complex();
    SubcomplexDepths depths(delta, field);
    RadicalDepthVerdict verdict;
    verdict.t = depths.get((std::uint64_t{1} << delta.facet_count()) - 1);

    const auto tables = detail::component_tables(d);
    const std::vector<int> lo(static_cast<std::size_t>(d.n()), 0);
    detail::for_each_in_box(lo, d.component_caps(), [&](std::span<const int> a) {
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < tables.size(); ++k) {
            if (!tables[k].contains(a)) mask |= std::uint64_t{1} << k;
        }
        if (mask == 0) return true;
        const int depth = depths.get(mask);
        if (depth >= verdict.t) return true;
        verdict.degree_condition = false;
        verdict.degree_witness.emplace(a.begin(), a.end());
        verdict.gamma_witness = detail::mask_indices(mask);
        verdict.gamma_depth = depth;
        return false;
    });

    for (std::uint64_t mask : detail::proper_subset_masks(delta.facet_count(), facet_cap)) {
        if (depths.get(mask) >= verdict.t) continue;
        if (l_gamma_witness(d, detail::mask_indices(mask))) {
            verdict.subcomplex_condition = false;
            break;
        }
    }

    if (verdict.degree_condition != verdict.subcomplex_condition) {
        throw std::logic_error("depth_equals_radical: degree and subcomplex conditions disagree");
    }
    verdict.equal = verdict.degree_condition;
    return verdict;
}

CriteriaAudit audit_depth_criteria(const Decomposition& d, const FieldSpec& field) {
    CriteriaAudit audit;
    const auto verdict = depth_equals_radical(d, field);
    audit.t = verdict.t;
    audit.depth = depth_via_takayama(d.intersection(), field);
    audit.depth_condition = audit.depth == audit.t;
    audit.degree_condition = verdict.degree_condition;
    audit.subcomplex_condition = verdict.subcomplex_condition;
    return audit;
}

}  // namespace rigidepth
