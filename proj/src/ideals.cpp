#include "rigidepth/ideals.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rigidepth {

namespace {

void require_same_n(int a, int b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        const int da = a.degree();
        const int db = b.degree();
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (auto& g : gens) {
        const bool redundant = std::any_of(kept.begin(), kept.end(),
                                           [&](const Monomial& k) { return k.divides(g); });
        if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
        if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
    }
}

Monomial Monomial::power(int n, int j, int e) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    exps.at(static_cast<std::size_t>(j - 1)) = e;
    return Monomial(std::move(exps));
}

Monomial Monomial::of_face(int n, Face f) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int v : f.vertices()) exps.at(static_cast<std::size_t>(v - 1)) = 1;
    return Monomial(std::move(exps));
}

Face Monomial::support() const {
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        if (exponents_[j] > 0) bits |= std::uint64_t{1} << j;
    }
    return Face(bits);
}

int Monomial::degree() const {
    long long total = 0;
    for (int e : exponents_) total += e;
    if (total > std::numeric_limits<int>::max()) throw std::overflow_error("monomial degree overflow");
    return static_cast<int>(total);
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        if (exponents_[j] > other.exponents_[j]) return false;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<int> exps(exponents_.size());
    for (std::size_t j = 0; j < exps.size(); ++j) exps[j] = std::max(exponents_[j], other.exponents_[j]);
    return Monomial(std::move(exps));
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        if (exponents_[j] == 0) continue;
        if (any) os << '*';
        os << 'x' << (j + 1);
        if (exponents_[j] > 1) os << '^' << exponents_[j];
        any = true;
    }
    if (!any) os << '1';
    return os.str();
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw std::out_of_range("ideal: variable count out of range");
    for (const auto& g : generators) require_same_n(g.n(), n, "ideal generator");
    generators_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::stanley_reisner(const Complex& delta) {
    const int n = delta.n();
    if (delta.is_void()) return MonomialIdeal(n, {Monomial::one(n)});
    // Minimal nonfaces are (face + one vertex); minimalization does the rest.
    std::vector<Monomial> gens;
    for (Face f : delta.all_faces()) {
        for (int v = 1; v <= n; ++v) {
            if (f.contains(v)) continue;
            const Face g = f | Face{v};
            if (!delta.contains(g)) gens.push_back(Monomial::of_face(n, g));
        }
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::face_prime(int n, Face f) {
    std::vector<Monomial> gens;
    for (int j = 1; j <= n; ++j) {
        if (!f.contains(j)) gens.push_back(Monomial::power(n, j, 1));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::irreducible(int n, Face f, std::span<const int> exponents) {
    require_same_n(static_cast<int>(exponents.size()), n, "irreducible exponents");
    std::vector<Monomial> gens;
    for (int j = 1; j <= n; ++j) {
        if (f.contains(j)) continue;
        const int e = exponents[static_cast<std::size_t>(j - 1)];
        if (e < 1) {
            throw std::invalid_argument("irreducible component: exponent of x" + std::to_string(j) +
                                        " must be positive");
        }
        gens.push_back(Monomial::power(n, j, e));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::face_prime_power(int n, Face f, int m) {
    if (m < 1) throw std::invalid_argument("prime power exponent must be positive");
    const std::vector<int> vars = (Face::full(n) - f).vertices();
    std::vector<Monomial> gens;
    if (vars.empty()) return MonomialIdeal(n, {});
    // Compositions of m into |vars| parts.
    std::vector<int> parts(vars.size(), 0);
    auto emit = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == vars.size()) {
            parts[idx] = remaining;
            std::vector<int> exps(static_cast<std::size_t>(n), 0);
            for (std::size_t k = 0; k < vars.size(); ++k) exps[static_cast<std::size_t>(vars[k] - 1)] = parts[k];
            gens.emplace_back(std::move(exps));
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            parts[idx] = e;
            self(self, idx + 1, remaining - e);
        }
    };
    emit(emit, 0, m);
    return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const Monomial& g) {
        return std::all_of(g.exponents().begin(), g.exponents().end(), [](int e) { return e <= 1; });
    });
}

Complex MonomialIdeal::radical_complex() const {
    if (is_unit()) return Complex::void_complex(n_);
    std::vector<Face> supports;
    for (const auto& g : generators_) supports.push_back(g.support());
    auto allowed = [&](Face f) {
        return std::none_of(supports.begin(), supports.end(), [&](Face s) { return s.is_subset_of(f); });
    };
    // Maximal independent sets of the support hypergraph.
    std::vector<Face> maximal;
    auto extend = [&](auto&& self, int v, Face current) -> void {
        if (v > n_) {
            for (int w = 1; w <= n_; ++w) {
                if (!current.contains(w) && allowed(current | Face{w})) return;
            }
            maximal.push_back(current);
            return;
        }
        const Face with = current | Face{v};
        if (allowed(with)) self(self, v + 1, with);
        self(self, v + 1, current);
    };
    extend(extend, 1, Face{});
    return Complex::from_facets(n_, std::move(maximal));
}

std::string MonomialIdeal::to_string() const {
    if (generators_.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += ", ";
        out += generators_[i].to_string();
    }
    return out + ")";
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
    require_same_n(ideal.n(), m.n(), "contains");
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool contains(const MonomialIdeal& ideal, std::span<const int> a) {
    require_same_n(ideal.n(), static_cast<int>(a.size()), "contains");
    for (const auto& g : ideal.generators()) {
        bool divides = true;
        for (std::size_t j = 0; j < a.size() && divides; ++j) divides = g.exponents()[j] <= a[j];
        if (divides) return true;
    }
    return false;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_n(a.n(), b.n(), "intersect");
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& u : a.generators()) {
        for (const auto& v : b.generators()) gens.push_back(u.lcm(v));
    }
    return MonomialIdeal(a.n(), std::move(gens));
}

MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals) {
    if (ideals.empty()) throw std::invalid_argument("intersect_all: empty family");
    MonomialIdeal acc = ideals.front();
    for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k]);
    return acc;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(Monomial::of_face(ideal.n(), g.support()));
    return MonomialIdeal(ideal.n(), std::move(gens));
}

int rho(const MonomialIdeal& ideal, int j) {
    if (j < 1 || j > ideal.n()) throw std::out_of_range("rho: variable index out of range");
    int best = 0;
    for (const auto& g : ideal.generators()) best = std::max(best, g.exponent(j));
    return best;
}

std::vector<int> rho_vector(const MonomialIdeal& ideal) {
    std::vector<int> out;
    for (int j = 1; j <= ideal.n(); ++j) out.push_back(rho(ideal, j));
    return out;
}

bool localization_membership(const MonomialIdeal& ideal, std::span<const int> a, Face f) {
    require_same_n(ideal.n(), static_cast<int>(a.size()), "localization_membership");
    for (const auto& g : ideal.generators()) {
        bool ok = true;
        for (int j = 1; j <= ideal.n() && ok; ++j) {
            if (!f.contains(j)) ok = g.exponent(j) <= a[static_cast<std::size_t>(j - 1)];
        }
        if (ok) return true;
    }
    return false;
}

Polarization polarize(const MonomialIdeal& ideal) {
    const auto caps = rho_vector(ideal);
    std::vector<int> offset(caps.size() + 1, 0);
    std::partial_sum(caps.begin(), caps.end(), offset.begin() + 1);
    const int total = offset.back();
    Polarization out;
    for (std::size_t j = 0; j < caps.size(); ++j) {
        for (int c = 1; c <= caps[j]; ++c) out.origin.emplace_back(static_cast<int>(j) + 1, c);
    }
    if (total == 0) {
        // Zero or unit ideal: keep one variable so the ring is well formed.
        std::vector<Monomial> gens;
        if (ideal.is_unit()) gens.push_back(Monomial::one(1));
        out.ideal = MonomialIdeal(1, std::move(gens));
        return out;
    }
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        std::vector<int> exps(static_cast<std::size_t>(total), 0);
        for (std::size_t j = 0; j < caps.size(); ++j) {
            for (int c = 0; c < g.exponents()[j]; ++c) exps[static_cast<std::size_t>(offset[j] + c)] = 1;
        }
        gens.emplace_back(std::move(exps));
    }
    out.ideal = MonomialIdeal(total, std::move(gens));
    return out;
}

UnmixedCheck validate_unmixed(const Complex& delta, std::span<const MonomialIdeal> components) {
    UnmixedCheck check;
    auto fail = [&](std::optional<std::size_t> facet, std::string reason) {
        check.valid = false;
        check.offending_facet = facet;
        check.reason = std::move(reason);
        return check;
    };
    if (delta.kind() != ComplexKind::ordinary) return fail(std::nullopt, "complex must be ordinary");
    if (!delta.is_pure()) return fail(std::nullopt, "complex is not pure");
    if (components.size() != delta.facet_count()) {
        return fail(std::nullopt, "expected one component per facet");
    }
    const int n = delta.n();
    for (std::size_t k = 0; k < components.size(); ++k) {
        const Face f = delta.facets()[k];
        const auto& comp = components[k];
        const std::string where = "component for facet " + f.to_string();
        if (comp.n() != n) return fail(k, where + ": ambient dimension mismatch");
        for (const auto& g : comp.generators()) {
            if (g.is_one()) return fail(k, where + " is the unit ideal");
            if (g.support().intersects(f)) {
                return fail(k, where + ": generator " + g.to_string() + " uses a variable of the facet");
            }
        }
        for (int j = 1; j <= n; ++j) {
            if (f.contains(j)) continue;
            const bool has_power = std::any_of(comp.generators().begin(), comp.generators().end(),
                                               [&](const Monomial& g) { return g.support() == Face{j}; });
            if (!has_power) return fail(k, where + ": no pure power of x" + std::to_string(j));
        }
    }
    return check;
}

Decomposition::Decomposition(Complex delta, std::vector<MonomialIdeal> components)
    : delta_(std::move(delta)), components_(std::move(components)) {
    const auto check = validate_unmixed(delta_, components_);
    if (!check.valid) throw std::invalid_argument("invalid decomposition: " + check.reason);
    caps_.assign(static_cast<std::size_t>(delta_.n()), 0);
    for (const auto& comp : components_) {
        for (int j = 1; j <= delta_.n(); ++j) {
            caps_[static_cast<std::size_t>(j - 1)] = std::max(caps_[static_cast<std::size_t>(j - 1)], rho(comp, j));
        }
    }
}

MonomialIdeal Decomposition::intersection() const { return intersect_all(components_); }

Decomposition build_decomposition(Complex delta, std::vector<MonomialIdeal> components) {
    return Decomposition(std::move(delta), std::move(components));
}

Decomposition irreducible_decomposition(const Complex& delta,
                                        const std::vector<std::vector<int>>& exponents) {
    if (exponents.size() != delta.facet_count()) {
        throw std::invalid_argument("expected one exponent vector per facet");
    }
    std::vector<MonomialIdeal> comps;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        comps.push_back(MonomialIdeal::irreducible(delta.n(), delta.facets()[k], exponents[k]));
    }
    return Decomposition(delta, std::move(comps));
}

Decomposition prime_power_decomposition(const Complex& delta, std::span<const int> powers) {
    if (powers.size() != delta.facet_count()) {
        throw std::invalid_argument("expected one power per facet");
    }
    std::vector<MonomialIdeal> comps;
    for (std::size_t k = 0; k < powers.size(); ++k) {
        comps.push_back(MonomialIdeal::face_prime_power(delta.n(), delta.facets()[k], powers[k]));
    }
    return Decomposition(delta, std::move(comps));
}

}  // namespace rigidepth
