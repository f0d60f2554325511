#include "cli.hpp"

#include "rigidepth/cones.hpp"
#include "rigidepth/criteria.hpp"
#include "rigidepth/homology.hpp"
#include "rigidepth/io.hpp"
#include "rigidepth/rigid.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rigidepth::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

// Two computations of the same quantity disagreed.
class Disagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- rendering ------------------------------------------------------------

bool is_flat(const Json& v) {
    if (!v.is_array()) return !v.is_object();
    return std::all_of(v.begin(), v.end(), [](const Json& e) {
        return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) {
                                        return x.is_primitive();
                                    }));
    }) && (v.empty() || !std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_string(); }));
}

void render_text(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_string()) {
            out << pad << key << ": " << value.get<std::string>() << "\n";
        } else if (value.is_object()) {
            out << pad << key << ":\n";
            render_text(value, out, indent + 2);
        } else if (is_flat(value)) {
            out << pad << key << ": " << value.dump() << "\n";
        } else {
            out << pad << key << ":\n";
            for (const auto& e : value) {
                if (e.is_string()) {
                    out << pad << "  " << e.get<std::string>() << "\n";
                } else if (e.is_object() && std::all_of(e.begin(), e.end(), [](const Json& x) {
                               return x.is_primitive();
                           })) {
                    out << pad << "  " << e.dump() << "\n";
                } else if (e.is_object()) {
                    out << pad << "  -\n";
                    render_text(e, out, indent + 4);
                } else {
                    out << pad << "  " << e.dump() << "\n";
                }
            }
        }
    }
}

void emit(const Json& report, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == OutputFormat::json) {
        out << report.dump(2) << "\n";
    } else {
        render_text(report, out, 0);
    }
}

// ---- report fragments ------------------------------------------------------

Json facet_list(const Complex& delta, const std::vector<std::size_t>& indices) {
    Json out = Json::array();
    for (std::size_t k : indices) out.push_back(io::to_json(delta.facets()[k]));
    return out;
}

Json certificate_json(const Complex& delta, const RigidCertificate& cert) {
    if (const auto* v = std::get_if<IntersectionViolation>(&cert)) {
        return Json{{"kind", "intersection"},
                    {"facets", facet_list(delta, v->facet_indices)},
                    {"intersection_size", v->intersection_size}};
    }
    const auto& bad = std::get<BadSubcomplex>(cert);
    return Json{{"kind", "subcomplex"}, {"facets", facet_list(delta, bad.facet_indices)}, {"depth", bad.depth}};
}

// ---- commands --------------------------------------------------------------

Json cmd_depth(const Json& doc, const std::string& source, const RunConfig& cfg) {
    const FieldSpec& field = cfg.field;
    Json report{{"field", field.to_string()}};
    switch (io::detect_kind(doc, source)) {
        case io::InputKind::complex: {
            const Complex delta = io::complex_from_json(doc);
            const auto cm = is_cohen_macaulay(delta, field);
            report["kind"] = "complex";
            report["dimension"] = delta.dimension();
            report["depth"] = depth_stanley_reisner(delta, field);
            report["cohen_macaulay"] = cm.cohen_macaulay;
            if (cm.violating_face) {
                report["violating_face"] = io::to_json(*cm.violating_face);
                report["violating_degree"] = cm.violating_degree;
            }
            report["reduced_betti"] = reduced_betti_numbers(delta, field);
            return report;
        }
        case io::InputKind::ideal:
        case io::InputKind::decomposition: {
            const bool is_decomp = io::detect_kind(doc, source) == io::InputKind::decomposition;
            std::optional<Decomposition> decomp;
            MonomialIdeal ideal;
            if (is_decomp) {
                decomp.emplace(io::decomposition_from_json(doc));
                ideal = decomp->intersection();
            } else {
                ideal = io::ideal_from_json(doc);
            }
            const int depth = is_decomp ? depth_via_takayama(*decomp, field) : depth_via_takayama(ideal, field);
            const Complex support = ideal.radical_complex();
            const int dim = support.dimension() + 1;
            report["kind"] = is_decomp ? "decomposition" : "ideal";
            report["depth"] = depth;
            report["krull_dimension"] = dim;
            report["cohen_macaulay"] = depth == dim;
            report["radical_depth"] = depth_stanley_reisner(support, field);
            if (cfg.oracle) {
                const int oracle = koszul_depth_oracle(ideal, field);
                report["oracle_depth"] = oracle;
                if (oracle != depth) {
                    throw Disagreement("local cohomology depth " + std::to_string(depth) +
                                       " differs from Koszul depth " + std::to_string(oracle));
                }
            }
            return report;
        }
        case io::InputKind::cone_union:
            break;
    }
    throw io::InputError(source + ": depth expects a complex, ideal or decomposition");
}

Json cmd_rigid(const Json& doc, const RunConfig& cfg) {
    const Complex delta = io::complex_from_json(doc);
    if (delta.kind() != ComplexKind::ordinary || !delta.is_pure()) {
        throw std::invalid_argument("rigid: the complex must be pure and nonempty");
    }
    const int t = depth_stanley_reisner(delta, cfg.field);
    const auto f = is_rigid_f(delta, t);
    Json report{{"field", cfg.field.to_string()}, {"t", t}, {"rigid", f.rigid}};
    if (f.certificate) report["certificate"] = certificate_json(delta, *f.certificate);
    if (delta.facet_count() <= cfg.facet_cap) {
        const auto d = is_rigid_d(delta, cfg.field, cfg.facet_cap);
        const auto e = is_rigid_e(delta, cfg.field, cfg.facet_cap);
        report["subcomplex_depth_test"] = d.rigid;
        report["skeleton_cm_test"] = e.rigid;
        if (d.certificate) report["subcomplex_certificate"] = certificate_json(delta, *d.certificate);
        if (d.rigid != f.rigid || e.rigid != f.rigid) {
            throw Disagreement("rigidity tests disagree: intersection " + std::to_string(f.rigid) +
                               ", subcomplex depth " + std::to_string(d.rigid) + ", skeleton " +
                               std::to_string(e.rigid));
        }
    } else {
        report["audits"] = "skipped: facet count exceeds the enumeration cap";
    }
    return report;
}

Json cmd_depth_equal_radical(const Json& doc, const RunConfig& cfg) {
    const Decomposition d = io::decomposition_from_json(doc);
    const auto v = depth_equals_radical(d, cfg.field, cfg.facet_cap);
    Json report{{"field", cfg.field.to_string()},
                {"t", v.t},
                {"equal", v.equal},
                {"degree_condition", v.degree_condition},
                {"subcomplex_condition", v.subcomplex_condition}};
    if (v.degree_witness) {
        report["degree"] = *v.degree_witness;
        report["gamma"] = facet_list(d.complex(), *v.gamma_witness);
        report["gamma_depth"] = v.gamma_depth;
    }
    if (cfg.oracle) {
        const int depth = depth_via_takayama(d, cfg.field);
        report["depth"] = depth;
        if ((depth == v.t) != v.equal) throw Disagreement("depth comparison disagrees with the degree condition");
    }
    return report;
}

Json cmd_cones(const Json& doc, const RunConfig& cfg) {
    const Complex delta = io::complex_from_json(doc);
    const auto u = generate_cone_union(delta, cfg.field, cfg.facet_cap);
    Json systems = Json::array();
    std::istringstream lines(format_systems(u));
    for (std::string line; std::getline(lines, line);) systems.push_back(line);
    Json report{{"field", cfg.field.to_string()}, {"systems", std::move(systems)}, {"union", io::to_json(u)}};
    if (cfg.grid_bound) {
        // Certifies the union against the decision procedure on the grid.
        std::size_t points = 0;
        std::vector<int> lo(u.symbols.size(), 1), hi(u.symbols.size(), *cfg.grid_bound);
        std::vector<int> v = lo;
        while (true) {
            ++points;
            const bool predicted = evaluate(u, v);
            const bool actual = depth_equals_radical(decomposition_from_values(delta, v), cfg.field).equal;
            if (predicted != actual) throw Disagreement("cone union disagrees with the depth criterion");
            std::size_t j = v.size();
            while (j > 0 && v[j - 1] == hi[j - 1]) {
                v[j - 1] = lo[j - 1];
                --j;
            }
            if (j == 0) break;
            ++v[j - 1];
        }
        report["grid_points_checked"] = points;
    }
    return report;
}

Json cmd_delta_a(const Json& doc, const std::string& source, const std::vector<int>& degree) {
    const auto kind = io::detect_kind(doc, source);
    const bool nonnegative = std::all_of(degree.begin(), degree.end(), [](int v) { return v >= 0; });
    Json report{{"degree", degree}};
    if (kind == io::InputKind::decomposition) {
        const Decomposition d = io::decomposition_from_json(doc);
        if (nonnegative) {
            report["form"] = "facet";
            report["complex"] = io::to_json(delta_a_facet_form(d, degree));
        } else {
            report["form"] = "localization";
            report["complex"] = io::to_json(delta_a_localization_form(d.intersection(), degree));
        }
        return report;
    }
    if (kind == io::InputKind::ideal) {
        report["form"] = "localization";
        report["complex"] = io::to_json(delta_a_localization_form(io::ideal_from_json(doc), degree));
        return report;
    }
    throw io::InputError(source + ": delta-a expects an ideal or decomposition");
}

MonomialIdeal ideal_input(const Json& doc, const std::string& source) {
    switch (io::detect_kind(doc, source)) {
        case io::InputKind::ideal: return io::ideal_from_json(doc);
        case io::InputKind::decomposition: return io::decomposition_from_json(doc).intersection();
        case io::InputKind::complex: return MonomialIdeal::stanley_reisner(io::complex_from_json(doc));
        default: break;
    }
    throw io::InputError(source + ": expected an ideal, decomposition or complex");
}

Json cmd_local_cohomology(const Json& doc, const std::string& source, const RunConfig& cfg,
                          std::optional<int> max_index, std::vector<int> lo, std::vector<int> hi) {
    const MonomialIdeal ideal = ideal_input(doc, source);
    const int n = ideal.n();
    if (lo.empty()) lo.assign(static_cast<std::size_t>(n), -1);
    if (hi.empty()) {
        hi = rho_vector(ideal);
        for (int& v : hi) v -= 1;
    }
    if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n) {
        throw std::invalid_argument("degree box bounds need " + std::to_string(n) + " entries");
    }
    const int top = max_index.value_or(n);
    Json cells = Json::array();
    std::vector<int> a = lo;
    bool empty = false;
    for (std::size_t j = 0; j < lo.size(); ++j) empty = empty || lo[j] > hi[j];
    while (!empty) {
        for (int i = 0; i <= top; ++i) {
            const auto dim = takayama_dim(ideal, i, a, cfg.field);
            if (dim != 0) cells.push_back(Json{{"index", i}, {"degree", a}, {"dimension", dim}});
        }
        std::size_t j = a.size();
        while (j > 0 && a[j - 1] == hi[j - 1]) {
            a[j - 1] = lo[j - 1];
            --j;
        }
        if (j == 0) break;
        ++a[j - 1];
    }
    std::stable_sort(cells.begin(), cells.end(),
                     [](const Json& x, const Json& y) { return x["index"].get<int>() < y["index"].get<int>(); });
    return Json{{"field", cfg.field.to_string()}, {"ideal", io::to_json(ideal)}, {"cells", std::move(cells)}};
}

Json cmd_polarize(const Json& doc, const std::string& source) {
    const auto pol = polarize(ideal_input(doc, source));
    Json origin = Json::array();
    for (const auto& [var, copy] : pol.origin) origin.push_back(Json::array({var, copy}));
    return Json{{"ideal", io::to_json(pol.ideal)}, {"origin", std::move(origin)}};
}

// ---- audit -----------------------------------------------------------------

class Auditor {
public:
    explicit Auditor(const RunConfig& cfg) : cfg_(cfg) {}

    void run_file(const fs::path& path) {
        file_ = path.filename().string();
        ++files_;
        const Json doc = io::load_file(path);
        instance_ = doc;
        switch (io::detect_kind(doc, path.string())) {
            case io::InputKind::complex: {
                const Complex c = io::complex_from_json(doc);
                check(io::complex_from_json(reparse(io::to_json(c))) == c, "round-trip");
                complex_suite(c);
                break;
            }
            case io::InputKind::ideal: {
                const MonomialIdeal ideal = io::ideal_from_json(doc);
                check(io::ideal_from_json(reparse(io::to_json(ideal))) == ideal, "round-trip");
                ideal_suite(ideal);
                break;
            }
            case io::InputKind::decomposition: {
                const Decomposition d = io::decomposition_from_json(doc);
                const Decomposition again = io::decomposition_from_json(reparse(io::to_json(d)));
                check(again.complex() == d.complex() && again.components() == d.components(), "round-trip");
                decomposition_suite(d);
                break;
            }
            case io::InputKind::cone_union: {
                const ConeUnion u = io::cone_union_from_json(doc);
                check(io::cone_union_from_json(reparse(io::to_json(u))) == u, "round-trip");
                break;
            }
        }
    }

    Json summary() const {
        return Json{{"field", cfg_.field.to_string()},
                    {"files", files_},
                    {"checks", checks_},
                    {"violations", violations_}};
    }

    bool clean() const { return violations_.empty(); }

private:
    static Json reparse(const Json& j) { return Json::parse(j.dump()); }

    void check(bool ok, const std::string& name, const std::string& detail = "") {
        ++checks_;
        if (ok) return;
        Json v{{"file", file_}, {"check", name}};
        if (!detail.empty()) v["detail"] = detail;
        v["instance"] = instance_;
        violations_.push_back(std::move(v));
    }

    std::vector<FieldSpec> fields() const {
        std::vector<FieldSpec> out{cfg_.field};
        for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        }
        return out;
    }

    void complex_suite(const Complex& delta) {
        for (const auto& field : fields()) {
            const auto h = check_homology_identities(delta, field);
            check(h.boundary_squares_to_zero, "boundary squares to zero");
            check(h.euler_from_faces == h.euler_from_betti, "Euler-Poincare identity over " + field.to_string());
        }
        if (delta.is_void()) return;
        const int q_depth = depth_stanley_reisner(delta, FieldSpec::rationals());
        for (const auto& field : fields()) {
            const int depth = depth_stanley_reisner(delta, field);
            check(is_cohen_macaulay(delta, field).cohen_macaulay == (depth == delta.dimension() + 1),
                  "Cohen-Macaulay iff depth = dim + 1 over " + field.to_string());
            check(depth <= q_depth, "depth over Q bounds depth over " + field.to_string());
        }
        if (delta.kind() != ComplexKind::ordinary || !delta.is_pure() || delta.facet_count() > cfg_.facet_cap) {
            return;
        }
        const FieldSpec& field = cfg_.field;
        const int t = depth_stanley_reisner(delta, field);
        const auto f = is_rigid_f(delta, t);
        const auto d = is_rigid_d(delta, field, cfg_.facet_cap);
        const auto e = is_rigid_e(delta, field, cfg_.facet_cap);
        check(f.rigid == d.rigid && d.rigid == e.rigid, "rigidity tests agree");
        for (const auto* v : {&f, &d, &e}) check(certificate_holds(delta, *v, field), "rigidity certificate");
        const auto chars = char_independence_audit(delta, {2, 3}, cfg_.facet_cap);
        for (const auto& msg : chars.violations) check(false, "field independence", msg);
        if (f.rigid) {
            for (const auto& msg : skeleton_propagation_audit(delta, field).violations) {
                check(false, "skeleton propagation", msg);
            }
            const auto sampled = sample_rigidity_bc(delta, field, 3, 5, cfg_.seed);
            check(sampled.mismatches.empty(), "sampled ideals have depth t");
        }
        const auto symbols = exponent_symbols(delta);
        if (delta.facet_count() <= 4 && symbols.size() <= 8) {
            const auto u = generate_cone_union(delta, field, cfg_.facet_cap);
            const int bound = cfg_.grid_bound.value_or(2);
            std::vector<int> v(symbols.size(), 1);
            bool agree = true;
            while (agree) {
                agree = evaluate(u, v) == depth_equals_radical(decomposition_from_values(delta, v), field).equal;
                std::size_t j = v.size();
                while (j > 0 && v[j - 1] == bound) v[--j] = 1;
                if (j == 0) break;
                ++v[j - 1];
            }
            check(agree, "cone union matches the depth criterion");
        }
    }

    void ideal_suite(const MonomialIdeal& ideal) {
        if (ideal.is_zero() || ideal.is_unit()) return;
        for (const auto& field : fields()) {
            const int depth = depth_via_takayama(ideal, field);
            check(depth == koszul_depth_oracle(ideal, field),
                  "local cohomology depth matches Koszul depth over " + field.to_string());
            check(depth <= depth_stanley_reisner(ideal.radical_complex(), field),
                  "depth is at most the radical's depth over " + field.to_string());
        }
    }

    void decomposition_suite(const Decomposition& d) {
        const FieldSpec& field = cfg_.field;
        const auto audit = audit_depth_criteria(d, field);
        check(audit.consistent(), "depth, degree and subcomplex conditions agree");
        check(depth_via_takayama(d, field) == audit.depth, "decomposition depth matches the intersection's");
        check(audit.depth <= audit.t, "depth is at most the radical's depth");
        ideal_suite(d.intersection());
    }

    RunConfig cfg_;
    std::string file_;
    Json instance_;
    int files_ = 0;
    int checks_ = 0;
    Json violations_ = Json::array();
};

Json cmd_audit(const fs::path& dir, const RunConfig& cfg, bool& clean) {
    if (!fs::is_directory(dir)) throw io::InputError(dir.string() + ": not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    Auditor auditor(cfg);
    for (const auto& f : files) auditor.run_file(f);
    clean = auditor.clean();
    return auditor.summary();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Depth, Cohen-Macaulayness and rigid depth of Stanley-Reisner and unmixed monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string field_text = "q";
    std::string format_text = "text";
    std::optional<int> grid_bound;
    app.add_option("--field", field_text, "Coefficient field: q or fp:<p>");
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--oracle", cfg.oracle, "Cross-check depths with the Koszul oracle");
    app.add_option("--seed", cfg.seed, "Seed for sampling");
    app.add_option("--cap", cfg.facet_cap, "Facet enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--grid-bound", grid_bound, "Exponent bound for grid certification")->check(CLI::PositiveNumber);

    std::string input;
    std::vector<int> degree, box_lo, box_hi;
    std::optional<int> max_index;
    auto* depth = app.add_subcommand("depth", "Depth of a complex, ideal or decomposition");
    auto* rigid = app.add_subcommand("rigid", "Rigid depth of a pure complex");
    auto* equal = app.add_subcommand("depth-equal-radical", "Whether an unmixed ideal has its radical's depth");
    auto* cones = app.add_subcommand("cones", "Inequality systems on irreducible exponents");
    auto* delta_a = app.add_subcommand("delta-a", "Degree-selected subcomplex");
    auto* local = app.add_subcommand("local-cohomology", "Graded pieces of local cohomology over a degree box");
    auto* polar = app.add_subcommand("polarize", "Polarization of a monomial ideal");
    auto* audit = app.add_subcommand("audit", "Run every property check over a directory of inputs");
    for (auto* sub : {depth, rigid, equal, cones, delta_a, local, polar, audit}) {
        sub->add_option("input", input, "Input file (directory for audit)")->required();
    }
    delta_a->add_option("--degree", degree, "Degree vector a, comma separated")->delimiter(',')->required();
    local->add_option("--max-index", max_index, "Largest cohomological index");
    local->add_option("--lo", box_lo, "Lower corner of the degree box")->delimiter(',');
    local->add_option("--hi", box_hi, "Upper corner of the degree box")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.field = FieldSpec::parse(field_text);
        cfg.format = format_text == "json" ? OutputFormat::json : OutputFormat::text;
        cfg.grid_bound = grid_bound;

        if (audit->parsed()) {
            bool clean = true;
            emit(cmd_audit(input, cfg, clean), cfg, out);
            return clean ? 0 : 1;
        }
        const Json doc = io::load_file(input);
        Json report;
        if (depth->parsed()) report = cmd_depth(doc, input, cfg);
        if (rigid->parsed()) report = cmd_rigid(doc, cfg);
        if (equal->parsed()) report = cmd_depth_equal_radical(doc, cfg);
        if (cones->parsed()) report = cmd_cones(doc, cfg);
        if (delta_a->parsed()) report = cmd_delta_a(doc, input, degree);
        if (local->parsed()) report = cmd_local_cohomology(doc, input, cfg, max_index, box_lo, box_hi);
        if (polar->parsed()) report = cmd_polarize(doc, input);
        emit(report, cfg, out);
        return 0;
    } catch (const Disagreement& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        // invalid_argument, out_of_range and length_error are input problems.
        const bool input_problem = dynamic_cast<const std::invalid_argument*>(&e) ||
                                   dynamic_cast<const std::out_of_range*>(&e) ||
                                   dynamic_cast<const std::length_error*>(&e) ||
                                   dynamic_cast<const std::domain_error*>(&e);
        err << "error: " << e.what() << "\n";
        return input_problem ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rigidepth::cli
