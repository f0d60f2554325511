#include "rigidepth/rigid.hpp"

#include "grid.hpp"
#include "rigidepth/criteria.hpp"
#include "rigidepth/homology.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rigidepth {

namespace {

void require_pure(const Complex& delta, const char* what) {
    if (delta.kind() != ComplexKind::ordinary || !delta.is_pure()) {
        throw std::invalid_argument(std::string(what) + ": complex must be pure and nonempty");
    }
}

Face common_intersection(const Complex& delta, const std::vector<std::size_t>& indices) {
    Face acc = delta.facets()[indices.front()];
    for (std::size_t idx : indices) acc = acc & delta.facets()[idx];
    return acc;
}

// Walks proper facet subsets and reports the first one failing `ok`.
template <typename Check>
RigidVerdict subcomplex_scan(const Complex& delta, const FieldSpec& field, std::size_t cap, Check ok) {
    RigidVerdict verdict;
    verdict.t = depth_stanley_reisner(delta, field);
    for (std::uint64_t mask : detail::proper_subset_masks(delta.facet_count(), cap)) {
        const Complex gamma = facet_subcomplex_mask(delta, mask);
        if (ok(gamma, verdict.t)) continue;
        verdict.rigid = false;
        verdict.certificate = BadSubcomplex{detail::mask_indices(mask), depth_stanley_reisner(gamma, field)};
        break;
    }
    return verdict;
}

}  // namespace

RigidVerdict is_rigid_f(const Complex& delta, int t) {
    require_pure(delta, "is_rigid_f");
    if (t < 1 || t > delta.dimension() + 1) {
        throw std::out_of_range("is_rigid_f: t must lie in 1..dim+1");
    }
    RigidVerdict verdict;
    verdict.t = t;
    const int r = static_cast<int>(delta.facet_count());
    const Face all = Face::full(r);
    for (int k = 1; k <= std::min(r, t); ++k) {
        auto tuples = subsets_of_size(all, k);
        std::sort(tuples.begin(), tuples.end(), [](Face a, Face b) { return a.vertices() < b.vertices(); });
        for (Face tuple : tuples) {
            const auto indices = detail::mask_indices(tuple.bits());
            const int size = common_intersection(delta, indices).size();
            if (size < t - k + 1) {
                verdict.rigid = false;
                verdict.certificate = IntersectionViolation{indices, size};
                return verdict;
            }
        }
    }
    return verdict;
}

RigidVerdict is_rigid_d(const Complex& delta, const FieldSpec& field, std::size_t facet_cap) {
    require_pure(delta, "is_rigid_d");
    return subcomplex_scan(delta, field, facet_cap, [&](const Complex& gamma, int t) {
        return depth_stanley_reisner(gamma, field) >= t;
    });
}

RigidVerdict is_rigid_e(const Complex& delta, const FieldSpec& field, std::size_t facet_cap) {
    require_pure(delta, "is_rigid_e");
    return subcomplex_scan(delta, field, facet_cap, [&](const Complex& gamma, int t) {
        return is_cohen_macaulay(skeleton(gamma, t - 1), field).cohen_macaulay;
    });
}

bool certificate_holds(const Complex& delta, const RigidVerdict& verdict, const FieldSpec& field) {
    if (verdict.rigid) return !verdict.certificate.has_value();
    if (!verdict.certificate) return false;
    const std::size_t r = delta.facet_count();
    auto indices_ok = [&](const std::vector<std::size_t>& idx) {
        return !idx.empty() && std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return i < r; });
    };
    if (const auto* v = std::get_if<IntersectionViolation>(&*verdict.certificate)) {
        if (!indices_ok(v->facet_indices)) return false;
        const int k = static_cast<int>(v->facet_indices.size());
        const int size = common_intersection(delta, v->facet_indices).size();
        return k <= verdict.t && size == v->intersection_size && size < verdict.t - k + 1;
    }
    const auto& bad = std::get<BadSubcomplex>(*verdict.certificate);
    if (!indices_ok(bad.facet_indices) || bad.facet_indices.size() >= r) return false;
    const int depth = depth_stanley_reisner(facet_subcomplex(delta, bad.facet_indices), field);
    return depth == bad.depth && depth < verdict.t;
}

int two_facet_depth(Face f, Face g) {
    if (f.is_subset_of(g) || g.is_subset_of(f)) {
        throw std::invalid_argument("two_facet_depth: facets must be incomparable");
    }
    return (f & g).size() + 1;
}

Decomposition squared_component_decomposition(const Complex& delta,
                                              const std::vector<std::size_t>& gamma_facets) {
    const int n = delta.n();
    const std::vector<int> twos(static_cast<std::size_t>(n), 2);
    std::vector<MonomialIdeal> comps;
    for (std::size_t k = 0; k < delta.facet_count(); ++k) {
        const Face f = delta.facets()[k];
        const bool in_gamma = std::find(gamma_facets.begin(), gamma_facets.end(), k) != gamma_facets.end();
        comps.push_back(in_gamma ? MonomialIdeal::irreducible(n, f, twos) : MonomialIdeal::face_prime(n, f));
    }
    return Decomposition(delta, std::move(comps));
}

SamplingReport sample_rigidity_bc(const Complex& delta, const FieldSpec& field, int exponent_bound,
                                  int trials, std::uint64_t seed) {
    require_pure(delta, "sample_rigidity_bc");
    if (exponent_bound < 1) throw std::invalid_argument("exponent bound must be positive");
    SamplingReport report;
    report.t = depth_stanley_reisner(delta, field);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> exponent(1, exponent_bound);
    const int n = delta.n();
    const std::size_t r = delta.facet_count();

    for (int trial = 0; trial < trials; ++trial) {
        SampledIdeal sample{"irreducible", {}, 0};
        for (std::size_t k = 0; k < r; ++k) {
            std::vector<int> exps(static_cast<std::size_t>(n), 0);
            for (int j = 1; j <= n; ++j) {
                if (!delta.facets()[k].contains(j)) exps[static_cast<std::size_t>(j - 1)] = exponent(rng);
            }
            sample.exponents.push_back(std::move(exps));
        }
        sample.depth = depth_via_takayama(irreducible_decomposition(delta, sample.exponents), field);
        ++report.irreducible_samples;
        if (sample.depth != report.t) report.mismatches.push_back(std::move(sample));
    }

    for (int trial = 0; trial < trials; ++trial) {
        SampledIdeal sample{"prime-power", {}, 0};
        std::vector<int> powers;
        for (std::size_t k = 0; k < r; ++k) {
            powers.push_back(exponent(rng));
            sample.exponents.push_back({powers.back()});
        }
        sample.depth = depth_via_takayama(prime_power_decomposition(delta, powers), field);
        ++report.prime_power_samples;
        if (sample.depth != report.t) report.mismatches.push_back(std::move(sample));
    }
    return report;
}

CharacteristicReport char_independence_audit(const Complex& delta, const std::vector<std::int64_t>& primes,
                                             std::size_t facet_cap) {
    require_pure(delta, "char_independence_audit");
    CharacteristicReport report;
    auto evaluate = [&](const FieldSpec& field) {
        const auto verdict = is_rigid_d(delta, field, facet_cap);
        return FieldAuditEntry{field, verdict.t, verdict.rigid};
    };
    report.rationals = evaluate(FieldSpec::rationals());
    for (std::int64_t p : primes) {
        const auto entry = evaluate(FieldSpec::prime(p));
        if (entry.depth > report.rationals.depth) {
            report.violations.push_back("depth over " + entry.field.to_string() + " (" +
                                        std::to_string(entry.depth) + ") exceeds depth over Q (" +
                                        std::to_string(report.rationals.depth) + ")");
        }
        if (report.rationals.rigid && !entry.rigid) {
            report.violations.push_back("rigid over Q but not over " + entry.field.to_string());
        }
        report.primes.push_back(entry);
    }
    return report;
}

SkeletonReport skeleton_propagation_audit(const Complex& delta, const FieldSpec& field) {
    require_pure(delta, "skeleton_propagation_audit");
    SkeletonReport report;
    report.t = depth_stanley_reisner(delta, field);
    if (!is_rigid_f(delta, report.t).rigid) {
        throw std::invalid_argument("skeleton_propagation_audit: complex does not have rigid depth");
    }
    bool seen_rigid = false;
    for (int i = report.t - 1; i <= delta.dimension(); ++i) {
        const Complex sk = skeleton(delta, i);
        SkeletonLevel level{i, depth_stanley_reisner(sk, field), false};
        if (level.depth != report.t) {
            report.violations.push_back("depth of the " + std::to_string(i) + "-skeleton is " +
                                        std::to_string(level.depth) + ", expected " + std::to_string(report.t));
        }
        level.rigid = is_rigid_f(sk, level.depth).rigid;
        if (!level.rigid) {
            if (!report.first_non_rigid) report.first_non_rigid = i;
            if (seen_rigid) {
                report.violations.push_back("the " + std::to_string(i) +
                                            "-skeleton is not rigid although a lower skeleton is");
            }
        }
        seen_rigid = seen_rigid || level.rigid;
        report.levels.push_back(level);
    }
    return report;
}

}  // namespace rigidepth
