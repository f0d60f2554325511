#include "rigidepth/cones.hpp"

#include "grid.hpp"
#include "rigidepth/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rigidepth {

namespace {

// (l, r) stands for symbols[l] >= symbols[r].
using Atom = std::pair<std::size_t, std::size_t>;
using Conjunction = std::vector<Atom>;

void normalize(std::vector<Atom>& atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

// Keeps the inclusion-minimal sets; a superset describes a smaller region
// already covered by the subset.
void keep_minimal(std::vector<std::vector<Atom>>& sets) {
    std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::vector<Atom>> kept;
    for (auto& s : sets) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
            return std::includes(s.begin(), s.end(), k.begin(), k.end());
        });
        if (!covered) kept.push_back(std::move(s));
    }
    sets = std::move(kept);
}

std::vector<Conjunction> expand(std::vector<std::vector<Atom>> clauses, bool prune) {
    if (prune) keep_minimal(clauses);
    std::vector<Conjunction> dnf{Conjunction{}};
    for (const auto& clause : clauses) {
        if (clause.empty()) return {};
        std::vector<Conjunction> next;
        for (const auto& d : dnf) {
            const bool satisfied = std::any_of(clause.begin(), clause.end(), [&](const Atom& c) {
                return std::binary_search(d.begin(), d.end(), c);
            });
            if (prune && satisfied) {
                next.push_back(d);
                continue;
            }
            for (const Atom& c : clause) {
                Conjunction grown = d;
                grown.push_back(c);
                normalize(grown);
                next.push_back(std::move(grown));
            }
        }
        if (prune) {
            keep_minimal(next);
        } else {
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
        }
        dnf = std::move(next);
    }
    return dnf;
}

bool holds(const Comparison& c, std::span<const int> values) {
    const int l = values[c.left];
    const int r = values[c.right];
    switch (c.relation) {
        case Relation::ge: return l >= r;
        case Relation::le: return l <= r;
        case Relation::eq: return l == r;
    }
    return false;
}

std::size_t symbol_index(const std::vector<ExponentSymbol>& symbols, ExponentSymbol s) {
    auto it = std::lower_bound(symbols.begin(), symbols.end(), s);
    if (it == symbols.end() || *it != s) throw std::logic_error("unknown exponent symbol");
    return static_cast<std::size_t>(it - symbols.begin());
}

// Symbol position of a1..a8 in the 4-cycle's canonical order.
constexpr std::size_t kFourCyclePosition[8] = {6, 7, 2, 3, 4, 5, 0, 1};

Comparison fourcycle_atom(int left, Relation rel, int right) {
    return {kFourCyclePosition[left - 1], rel, kFourCyclePosition[right - 1]};
}

}  // namespace

std::string to_string(Relation rel) {
    switch (rel) {
        case Relation::ge: return ">=";
        case Relation::le: return "<=";
        case Relation::eq: return "=";
    }
    return "?";
}

Relation parse_relation(const std::string& text) {
    if (text == ">=") return Relation::ge;
    if (text == "<=") return Relation::le;
    if (text == "=" || text == "==") return Relation::eq;
    throw std::invalid_argument("unknown relation '" + text + "'");
}

std::vector<ExponentSymbol> exponent_symbols(const Complex& delta) {
    std::vector<ExponentSymbol> out;
    for (std::size_t k = 0; k < delta.facet_count(); ++k) {
        for (int j = 1; j <= delta.n(); ++j) {
            if (!delta.facets()[k].contains(j)) out.push_back({k, j - 1});
        }
    }
    return out;
}

ConeUnion generate_cone_union(const Complex& delta, const FieldSpec& field, std::size_t facet_cap,
                              bool prune) {
    if (delta.kind() != ComplexKind::ordinary || !delta.is_pure()) {
        throw std::invalid_argument("generate_cone_union: complex must be pure and nonempty");
    }
    ConeUnion u;
    u.n = delta.n();
    u.symbols = exponent_symbols(delta);
    const int t = depth_stanley_reisner(delta, field);
    const auto& facets = delta.facets();
    const std::size_t r = facets.size();

    std::vector<std::vector<Atom>> clauses;
    for (std::uint64_t mask : detail::proper_subset_masks(r, facet_cap)) {
        if (depth_stanley_reisner(facet_subcomplex_mask(delta, mask), field) >= t) continue;
        const auto gamma = detail::mask_indices(mask);
        const auto rest = detail::mask_indices(~mask & ((std::uint64_t{1} << r) - 1));
        // Choose one variable outside each complement facet.
        std::vector<int> lo(rest.size(), 0), hi(rest.size());
        std::vector<std::vector<int>> outside(rest.size());
        for (std::size_t q = 0; q < rest.size(); ++q) {
            outside[q] = (Face::full(delta.n()) - facets[rest[q]]).vertices();
            hi[q] = static_cast<int>(outside[q].size()) - 1;
        }
        detail::for_each_in_box(lo, hi, [&](std::span<const int> choice) {
            std::vector<Atom> clause;
            for (std::size_t q = 0; q < rest.size(); ++q) {
                const int j = outside[q][static_cast<std::size_t>(choice[q])];
                const std::size_t left = symbol_index(u.symbols, {rest[q], j - 1});
                for (std::size_t k : gamma) {
                    if (facets[k].contains(j)) continue;
                    clause.emplace_back(left, symbol_index(u.symbols, {k, j - 1}));
                }
            }
            normalize(clause);
            clauses.push_back(std::move(clause));
            return true;
        });
    }

    for (const auto& conj : expand(std::move(clauses), prune)) {
        std::vector<Comparison> row;
        for (const auto& [l, r2] : conj) row.push_back({l, Relation::ge, r2});
        u.disjuncts.push_back(std::move(row));
    }
    std::sort(u.disjuncts.begin(), u.disjuncts.end());
    return u;
}

bool evaluate(const ConeUnion& u, std::span<const int> values) {
    if (values.size() != u.symbols.size()) {
        throw std::invalid_argument("evaluate: expected " + std::to_string(u.symbols.size()) + " values, got " +
                                    std::to_string(values.size()));
    }
    return std::any_of(u.disjuncts.begin(), u.disjuncts.end(), [&](const auto& conj) {
        return std::all_of(conj.begin(), conj.end(), [&](const Comparison& c) { return holds(c, values); });
    });
}

bool evaluate(const ConeUnion& u, const std::map<ExponentSymbol, int>& assignment) {
    std::vector<int> values;
    for (const auto& s : u.symbols) {
        auto it = assignment.find(s);
        if (it == assignment.end()) {
            throw std::invalid_argument("evaluate: no value for a[" + std::to_string(s.facet + 1) + "," +
                                        std::to_string(s.var + 1) + "]");
        }
        values.push_back(it->second);
    }
    return evaluate(u, values);
}

Decomposition decomposition_from_values(const Complex& delta, std::span<const int> values) {
    const auto symbols = exponent_symbols(delta);
    if (values.size() != symbols.size()) {
        throw std::invalid_argument("decomposition_from_values: expected " + std::to_string(symbols.size()) +
                                    " values");
    }
    std::vector<std::vector<int>> exps(delta.facet_count(), std::vector<int>(static_cast<std::size_t>(delta.n()), 0));
    for (std::size_t s = 0; s < symbols.size(); ++s) {
        exps[symbols[s].facet][static_cast<std::size_t>(symbols[s].var)] = values[s];
    }
    return irreducible_decomposition(delta, exps);
}

Complex fourcycle_complex() {
    return Complex::from_facets(4, {Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}});
}

std::vector<int> fourcycle_values(std::span<const int> a) {
    if (a.size() != 8) throw std::invalid_argument("4-cycle exponent vector must have 8 entries");
    std::vector<int> values(8);
    for (std::size_t k = 0; k < 8; ++k) values[kFourCyclePosition[k]] = a[k];
    return values;
}

Decomposition fourcycle_decomposition(std::span<const int> a) {
    return decomposition_from_values(fourcycle_complex(), fourcycle_values(a));
}

ConeUnion fourcycle_reference_system() {
    ConeUnion u;
    u.n = 4;
    u.symbols = exponent_symbols(fourcycle_complex());
    using R = Relation;
    u.disjuncts = {
        {fourcycle_atom(3, R::le, 1), fourcycle_atom(2, R::eq, 5), fourcycle_atom(7, R::le, 6)},
        {fourcycle_atom(2, R::le, 5), fourcycle_atom(6, R::eq, 7), fourcycle_atom(4, R::le, 8)},
        {fourcycle_atom(5, R::le, 2), fourcycle_atom(1, R::eq, 3), fourcycle_atom(8, R::le, 4)},
        {fourcycle_atom(1, R::le, 3), fourcycle_atom(4, R::eq, 8), fourcycle_atom(6, R::le, 7)},
    };
    return u;
}

GridComparison grid_equivalence(const ConeUnion& u1, const ConeUnion& u2, int bound) {
    if (u1.symbols != u2.symbols) throw std::invalid_argument("grid_equivalence: symbol sets differ");
    if (bound < 1) throw std::invalid_argument("grid_equivalence: bound must be positive");
    GridComparison result;
    const std::vector<int> lo(u1.symbols.size(), 1), hi(u1.symbols.size(), bound);
    detail::for_each_in_box(lo, hi, [&](std::span<const int> v) {
        ++result.points;
        if (evaluate(u1, v) == evaluate(u2, v)) return true;
        result.equivalent = false;
        result.counterexample.emplace(v.begin(), v.end());
        return false;
    });
    return result;
}

ConvexityReport convexity_probe(const ConeUnion& u, std::span<const int> p, std::span<const int> q) {
    if (p.size() != q.size()) throw std::invalid_argument("convexity_probe: points differ in length");
    if (!evaluate(u, p) || !evaluate(u, q)) {
        throw std::invalid_argument("convexity_probe: both endpoints must satisfy the system");
    }
    ConvexityReport report;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if ((p[s] + q[s]) % 2 != 0) {
            throw std::invalid_argument("convexity_probe: midpoint coordinate " + std::to_string(s + 1) +
                                        " is not an integer");
        }
        report.midpoint.push_back((p[s] + q[s]) / 2);
    }
    report.midpoint_satisfies = evaluate(u, report.midpoint);
    report.convexity_fails = !report.midpoint_satisfies;
    return report;
}

std::string format_systems(const ConeUnion& u) {
    auto name = [&](std::size_t s) {
        return "a[" + std::to_string(u.symbols[s].facet + 1) + "," + std::to_string(u.symbols[s].var + 1) + "]";
    };
    if (u.disjuncts.empty()) return "false\n";
    std::string out;
    for (const auto& conj : u.disjuncts) {
        if (conj.empty()) out += "true";
        for (std::size_t c = 0; c < conj.size(); ++c) {
            if (c > 0) out += " and ";
            out += name(conj[c].left) + " " + to_string(conj[c].relation) + " " + name(conj[c].right);
        }
        out += "\n";
    }
    return out;
}

}  // namespace rigidepth
