#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "dunwoody/complexity.hpp"
#include "dunwoody/families.hpp"
#include "dunwoody/homology.hpp"

namespace dunwoody {

struct check_result {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct curve_summary {
    int64 id;
    curve_system system;
    int64 crossings;
};

struct analysis_report {
    dunwoody_params params;
    dunwoody_params equivalent;
    int64 genus = 0;
    system_class cprime_class, csecond_class;
    int64 cprime_count = 0, csecond_count = 0;
    std::vector<curve_summary> curves;
    std::vector<int64> boundary;
    complexity_result complexity;
    homology_group homology;
    lower_bound lower;
    std::optional<int64> upper_formula;
    std::vector<check_result> checks;
    std::vector<std::string> flags;
    std::optional<family_spec> family;
    double timing_ms = 0.0;
};

struct analyze_options {
    int64 max_forests = default_forest_cap;
    bool greedy = false;
    bool assume_irreducible = false;
};

namespace detail {

template <typename T>
std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline void add_check(analysis_report& rep, const std::string& name, const std::string& expected,
                      const std::string& actual) {
    rep.checks.push_back({name, expected, actual, expected == actual});
}

inline std::string profile_string(std::map<int64, int64> prof) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [crossings, count] : prof) {
        if (!first) os << ' ';
        first = false;
        os << count << 'x' << crossings;
    }
    return os.str();
}

inline std::string show_vec(const std::vector<int64>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << ']';
    return os.str();
}

inline void evaluate_family_checks(analysis_report& rep, const family_spec& fs) {
    if (fs.curve_count_expected)
        add_check(rep, "family_curve_count", show(*fs.curve_count_expected), show(rep.csecond_count));
    if (!fs.crossing_profile_expected.empty()) {
        std::map<int64, int64> want, got;
        for (const auto& [crossings, count] : fs.crossing_profile_expected) want[crossings] += count;
        for (const auto& c : rep.curves)
            if (c.system == curve_system::csecond) got[c.crossings] += 1;
        add_check(rep, "family_crossing_profile", profile_string(want), profile_string(got));
    }
    if (fs.boundary_expected)
        add_check(rep, "family_boundary", show_vec(*fs.boundary_expected), show_vec(rep.boundary));
    if (fs.upper_bound) {
        add_check(rep, "family_upper_bound_holds", "true",
                  rep.complexity.c_tilde <= *fs.upper_bound ? "true" : "false");
        if (fs.upper_equality_expected)
            add_check(rep, "family_upper_bound_attained", show(*fs.upper_bound),
                      show(rep.complexity.c_tilde));
    }
    if (fs.h1_rank_expected)
        add_check(rep, "family_h1_rank", show(*fs.h1_rank_expected), show(rep.homology.rank));
    if (fs.torsion_order_formula)
        add_check(rep, "family_torsion_formula", fs.torsion_order_formula->str(),
                  rep.homology.torsion_order().str());
    if (fs.torsion_order_derived)
        add_check(rep, "family_torsion_derived", fs.torsion_order_derived->str(),
                  rep.homology.torsion_order().str());
    if (fs.lower_bound_formula && rep.lower.applicable)
        add_check(rep, "family_lower_below_engine", "true",
                  *fs.lower_bound_formula <= rep.complexity.c_tilde + 1e-9 ? "true" : "false");
}

}  // namespace detail

inline analysis_report analyze(const closed_diagram& cd, analyze_options opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    analysis_report rep;
    rep.params = cd.params;
    rep.equivalent = equivalent_params(cd.params);
    rep.genus = genus_of(cd);
    rep.cprime_class = classify(cd, curve_system::cprime);
    rep.csecond_class = classify(cd, curve_system::csecond);
    rep.cprime_count = cd.params.n;
    rep.csecond_count = static_cast<int64>(cd.active_csecond_ids().size());
    for (const auto& c : cd.cprime) {
        int64 active = 0;
        for (int64 v : c.vertices)
            if (cd.vertex_active(v)) ++active;
        rep.curves.push_back({c.id, curve_system::cprime, active});
    }
    for (int64 id : cd.active_csecond_ids())
        rep.curves.push_back({id, curve_system::csecond, cd.csecond[static_cast<size_t>(id)].crossings()});
    rep.boundary = boundary_profile(cd);
    rep.complexity = modified_complexity(cd, {opt.max_forests, opt.greedy});
    rep.homology = h1(cd);
    rep.lower = matveev_lower_bound(rep.homology, opt.assume_irreducible);
    rep.upper_formula = dunwoody_formula_bound(cd.params);

    const auto& p = cd.params;
    detail::add_check(rep, "euler_characteristic", detail::show(2 - 2 * p.n),
                      detail::show(cd.euler_characteristic()));
    int64 crossing_sum = 0;
    int64 min_crossings = cd.vertex_count;
    for (int64 id : cd.active_csecond_ids()) {
        crossing_sum += cd.csecond[static_cast<size_t>(id)].crossings();
        min_crossings = std::min(min_crossings, cd.csecond[static_cast<size_t>(id)].crossings());
    }
    detail::add_check(rep, "crossing_partition", detail::show(cd.active_vertex_count()),
                      detail::show(crossing_sum));
    detail::add_check(rep, "csecond_curves_cross", "true", min_crossings >= 1 ? "true" : "false");
    detail::add_check(rep, "cyclic_symmetry", "true", has_cyclic_symmetry(cd) ? "true" : "false");
    if (rep.upper_formula && rep.csecond_class.proper && rep.csecond_class.reduced)
        detail::add_check(rep, "dunwoody_formula", detail::show(*rep.upper_formula),
                          detail::show(rep.complexity.c_tilde));
    if (opt.assume_irreducible)
        detail::add_check(rep, "lower_bound_below_ctilde", "true",
                          rep.lower.value <= rep.complexity.c_tilde + 1e-9 ? "true" : "false");

    if (p.n == 1) rep.flags.push_back("n=1: lens space / solid torus regime");
    if (p.r == mod(-p.b, p.d))
        rep.flags.push_back("twist r = -b: the C'' system is not reduced (not a Dunwoody manifold)");

    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
    return rep;
}

inline analysis_report analyze(const dunwoody_params& p, analyze_options opt = {}) {
    return analyze(build_diagram(p), opt);
}

inline analysis_report analyze_family(const family_spec& fs, analyze_options opt = {}) {
    analysis_report rep = analyze(fs.params, opt);
    rep.family = fs;
    detail::evaluate_family_checks(rep, fs);
    return rep;
}

// The convention-pinning battery: lens-space homology of 2-fold 2-bridge
// covers, link curve counts, theta boundary profiles, and invariance under
// the parameter equivalence.  Prints one line per item.
inline bool run_calibration(std::ostream& os, glue_convention cv = {}) {
    bool all = true;
    // a battery item that cannot even build its diagram has failed
    auto item = [&](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        os << (ok ? "[pass] " : "[FAIL] ") << name << note << '\n';
        all = all && ok;
    };

    for (int64 alpha : {3, 5, 7, 9}) {
        item("h1 of 2-fold cover of b(" + std::to_string(alpha) + ",1) is Z_" + std::to_string(alpha),
             [&, alpha] {
                 auto p = validate_params(1, alpha - 2, 1, 2, 3, 1);
                 auto h = h1(glue(build_planar(p), p, cv));
                 bigint oracle = branched_cover_h1_order(alpha, 1, 2).order;
                 return h.rank == 0 && h.torsion_order() == alpha && oracle == alpha;
             });
    }

    struct link_cell { int64 alpha, beta, n, s; };
    for (auto [alpha, beta, n, s] : {link_cell{4, 1, 2, 1}, link_cell{4, 1, 4, 2},
                                     link_cell{6, 1, 3, 1}, link_cell{8, 3, 4, 2}}) {
        item("link cover b(" + std::to_string(alpha) + "," + std::to_string(beta) + ") n=" +
                 std::to_string(n) + " s=" + std::to_string(s) + " has n+gcd(n,s) curves",
             [&, alpha, beta, n, s] {
                 auto p = validate_params(beta, alpha - 2 * beta, 1, n, 2 * beta + 1, s);
                 auto cd = glue(build_planar(p), p, cv);
                 int64 g = gcd64(n, s);
                 if (static_cast<int64>(cd.csecond.size()) != n + g) return false;
                 int64 type_a = 0, type_b = 0;
                 for (const auto& c : cd.csecond) {
                     if (c.crossings() == n / g) ++type_a;
                     if (c.crossings() == alpha) ++type_b;
                 }
                 return (n / g == alpha) ? type_a == n + g : (type_a == g && type_b == n);
             });
    }

    item("theta cover of b(3,1), n=5 s=2: two genus-2 boundary components", [&] {
        auto p = validate_params(1, 1, 1, 5, 3, 2);
        auto cd = glue(build_planar(p), p, cv);
        return cd.csecond.size() == 2 && boundary_profile(cd) == std::vector<int64>{2, 2};
    });
    item("theta cover of b(5,3), n=4 s=2: three curves, two genus-1 boundary components", [&] {
        auto p = validate_params(2, 1, 1, 4, 5, 1);  // mirrored form
        auto cd = glue(build_planar(p), p, cv);
        return cd.csecond.size() == 3 && boundary_profile(cd) == std::vector<int64>{1, 1};
    });

    item("equivalent parameters give the same ctilde, H1, boundary and curve count", [&] {
        for (int64 a = 0; a <= 2; ++a)
            for (int64 b = 0; b <= 2; ++b)
                for (int64 c = 0; c <= 2; ++c) {
                    if (2 * a + b + c == 0) continue;
                    for (int64 n : {2, 3})
                        for (int64 r : {0, 1, 3})
                            for (int64 s : {0, 1}) {
                                auto p = validate_params(a, b, c, n, r, s);
                                closed_diagram cd1, cd2;
                                try {
                                    cd1 = glue(build_planar(p), p, cv);
                                    auto q = equivalent_params(p);
                                    cd2 = glue(build_planar(q), q, cv);
                                } catch (const unsupported_diagram&) {
                                    continue;
                                }
                                auto r1 = modified_complexity(cd1), r2 = modified_complexity(cd2);
                                if (r1.c_tilde != r2.c_tilde) return false;
                                if (!(h1(cd1) == h1(cd2))) return false;
                                if (boundary_profile(cd1) != boundary_profile(cd2)) return false;
                                if (cd1.csecond.size() != cd2.csecond.size()) return false;
                            }
                }
        return true;
    });
    return all;
}

}  // namespace dunwoody
