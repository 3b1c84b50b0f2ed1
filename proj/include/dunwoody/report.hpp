#pragma once

#include <json.hpp>

#include "dunwoody/analysis.hpp"

namespace dunwoody {

using nlohmann::json;

namespace detail {

// torsion coefficients are arbitrary precision; emit numbers while they fit
inline json big_to_json(const bigint& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(v.convert_to<long long>());
    return json(v.str());
}

inline bigint big_from_json(const json& j) {
    if (j.is_string()) return bigint(j.get<std::string>());
    return bigint(j.get<long long>());
}

}  // namespace detail

inline json to_json(const dunwoody_params& p) {
    return json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"n", p.n}, {"r", p.r}, {"s", p.s}, {"d", p.d}};
}

inline dunwoody_params params_from_json(const json& j) {
    return validate_params(j.at("a"), j.at("b"), j.at("c"), j.at("n"), j.at("r"), j.at("s"));
}

inline json to_json(const system_class& sc) {
    return json{{"proper", sc.proper}, {"reduced", sc.reduced}};
}

inline json to_json(const family_spec& fs) {
    json j{{"family", fs.family}, {"params", to_json(fs.params)}};
    json fp = json::object();
    for (const auto& [k, v] : fs.family_params) fp[k] = v;
    j["family_params"] = fp;
    if (fs.upper_bound) j["upper_bound"] = *fs.upper_bound;
    j["upper_equality_expected"] = fs.upper_equality_expected;
    if (fs.lower_bound_formula) j["lower_bound_formula"] = *fs.lower_bound_formula;
    if (fs.lower_bound_alternate) j["lower_bound_alternate"] = *fs.lower_bound_alternate;
    if (fs.torsion_order_formula) j["torsion_order_formula"] = detail::big_to_json(*fs.torsion_order_formula);
    if (fs.torsion_order_derived)
        j["torsion_order_derived"] = detail::big_to_json(*fs.torsion_order_derived);
    if (fs.h1_rank_expected) j["h1_rank_expected"] = *fs.h1_rank_expected;
    if (fs.curve_count_expected) j["curve_count_expected"] = *fs.curve_count_expected;
    if (!fs.crossing_profile_expected.empty()) {
        json arr = json::array();
        for (const auto& [crossings, count] : fs.crossing_profile_expected)
            arr.push_back(json{{"crossings", crossings}, {"count", count}});
        j["crossing_profile_expected"] = arr;
    }
    if (fs.boundary_expected) j["boundary_expected"] = *fs.boundary_expected;
    if (fs.selected_s) j["selected_s"] = *fs.selected_s;
    if (!fs.notes.empty()) j["notes"] = fs.notes;
    return j;
}

inline family_spec family_from_json(const json& j) {
    family_spec fs;
    fs.family = j.at("family");
    fs.params = params_from_json(j.at("params"));
    for (auto it = j.at("family_params").begin(); it != j.at("family_params").end(); ++it)
        fs.family_params.push_back({it.key(), it.value().get<int64>()});
    if (j.contains("upper_bound")) fs.upper_bound = j["upper_bound"].get<int64>();
    fs.upper_equality_expected = j.value("upper_equality_expected", false);
    if (j.contains("lower_bound_formula")) fs.lower_bound_formula = j["lower_bound_formula"].get<double>();
    if (j.contains("lower_bound_alternate"))
        fs.lower_bound_alternate = j["lower_bound_alternate"].get<double>();
    if (j.contains("torsion_order_formula"))
        fs.torsion_order_formula = detail::big_from_json(j["torsion_order_formula"]);
    if (j.contains("torsion_order_derived"))
        fs.torsion_order_derived = detail::big_from_json(j["torsion_order_derived"]);
    if (j.contains("h1_rank_expected")) fs.h1_rank_expected = j["h1_rank_expected"].get<int64>();
    if (j.contains("curve_count_expected"))
        fs.curve_count_expected = j["curve_count_expected"].get<int64>();
    if (j.contains("crossing_profile_expected"))
        for (const auto& e : j["crossing_profile_expected"])
            fs.crossing_profile_expected.push_back({e.at("crossings"), e.at("count")});
    if (j.contains("boundary_expected"))
        fs.boundary_expected = j["boundary_expected"].get<std::vector<int64>>();
    if (j.contains("selected_s")) fs.selected_s = j["selected_s"].get<int64>();
    if (j.contains("notes")) fs.notes = j["notes"].get<std::vector<std::string>>();
    return fs;
}

inline json to_json(const analysis_report& rep) {
    json j;
    j["params"] = to_json(rep.params);
    j["equivalent_params"] = to_json(rep.equivalent);
    j["genus"] = rep.genus;
    j["systems"] = json{
        {"cprime", {{"proper", rep.cprime_class.proper},
                    {"reduced", rep.cprime_class.reduced},
                    {"count", rep.cprime_count}}},
        {"csecond", {{"proper", rep.csecond_class.proper},
                     {"reduced", rep.csecond_class.reduced},
                     {"count", rep.csecond_count}}},
    };
    json curves = json::array();
    for (const auto& c : rep.curves)
        curves.push_back(json{{"id", c.id},
                              {"system", c.system == curve_system::cprime ? "cprime" : "csecond"},
                              {"crossings", c.crossings}});
    j["curves"] = curves;
    j["boundary"] = rep.boundary;
    j["complexity"] = json{
        {"c", rep.complexity.c_h},
        {"ctilde", rep.complexity.c_tilde},
        {"mode", rep.complexity.mode == complexity_mode::exact ? "exact" : "greedy-bound"},
        {"witness", {{"forest", rep.complexity.witness.forest},
                     {"region", rep.complexity.witness.region},
                     {"nR", rep.complexity.witness.n_r},
                     {"sumNgamma", rep.complexity.witness.sum_n_gamma}}},
    };
    json torsion = json::array();
    for (const auto& t : rep.homology.torsion) torsion.push_back(detail::big_to_json(t));
    j["homology"] = json{{"rank", rep.homology.rank},
                         {"torsion", torsion},
                         {"order", detail::big_to_json(rep.homology.torsion_order())}};
    json bounds;
    bounds["upper_engine"] = rep.complexity.c_tilde;
    if (rep.upper_formula)
        bounds["upper_formula"] = *rep.upper_formula;
    else
        bounds["upper_formula"] = nullptr;
    bounds["lower"] = rep.lower.value;
    bounds["lower_applicable"] = rep.lower.applicable;
    j["bounds"] = bounds;
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name},
                              {"expected", c.expected},
                              {"actual", c.actual},
                              {"pass", c.pass}});
    j["checks"] = checks;
    j["flags"] = rep.flags;
    if (rep.family) j["family"] = to_json(*rep.family);
    j["timing_ms"] = rep.timing_ms;
    return j;
}

inline analysis_report report_from_json(const json& j) {
    analysis_report rep;
    rep.params = params_from_json(j.at("params"));
    rep.equivalent = params_from_json(j.at("equivalent_params"));
    rep.genus = j.at("genus");
    rep.cprime_class = {j["systems"]["cprime"]["proper"], j["systems"]["cprime"]["reduced"]};
    rep.csecond_class = {j["systems"]["csecond"]["proper"], j["systems"]["csecond"]["reduced"]};
    rep.cprime_count = j["systems"]["cprime"]["count"];
    rep.csecond_count = j["systems"]["csecond"]["count"];
    for (const auto& c : j.at("curves"))
        rep.curves.push_back({c.at("id"),
                              c.at("system") == "cprime" ? curve_system::cprime
                                                         : curve_system::csecond,
                              c.at("crossings")});
    rep.boundary = j.at("boundary").get<std::vector<int64>>();
    const auto& cx = j.at("complexity");
    rep.complexity.c_h = cx.at("c");
    rep.complexity.c_tilde = cx.at("ctilde");
    rep.complexity.mode =
        cx.at("mode") == "exact" ? complexity_mode::exact : complexity_mode::greedy_bound;
    rep.complexity.witness.forest = cx.at("witness").at("forest").get<std::vector<int64>>();
    rep.complexity.witness.region = cx.at("witness").at("region");
    rep.complexity.witness.n_r = cx.at("witness").at("nR");
    rep.complexity.witness.sum_n_gamma = cx.at("witness").at("sumNgamma");
    rep.homology.rank = j.at("homology").at("rank");
    for (const auto& t : j.at("homology").at("torsion"))
        rep.homology.torsion.push_back(detail::big_from_json(t));
    if (!j.at("bounds").at("upper_formula").is_null())
        rep.upper_formula = j.at("bounds").at("upper_formula").get<int64>();
    rep.lower.value = j.at("bounds").at("lower");
    rep.lower.applicable = j.at("bounds").at("lower_applicable");
    for (const auto& c : j.at("checks"))
        rep.checks.push_back({c.at("name"), c.at("expected"), c.at("actual"), c.at("pass")});
    rep.flags = j.at("flags").get<std::vector<std::string>>();
    if (j.contains("family")) rep.family = family_from_json(j["family"]);
    rep.timing_ms = j.at("timing_ms");
    return rep;
}

// -------- flat renderings --------

inline std::string csv_header() {
    return "a,b,c,n,r,s,d,genus,cprime_class,csecond_class,csecond_count,boundary,cH,ctilde,mode,"
           "h1_rank,h1_torsion,h1_order,upper_formula,formula_match,lower,lower_applicable,"
           "checks_passed,checks_failed,flags";
}

inline std::string csv_row(const analysis_report& rep) {
    std::ostringstream os;
    const auto& p = rep.params;
    os << p.a << ',' << p.b << ',' << p.c << ',' << p.n << ',' << p.r << ',' << p.s << ',' << p.d
       << ',' << rep.genus << ',' << rep.cprime_class.label() << ',' << rep.csecond_class.label()
       << ',' << rep.csecond_count << ',';
    for (size_t i = 0; i < rep.boundary.size(); ++i) os << (i ? ";" : "") << rep.boundary[i];
    os << ',' << rep.complexity.c_h << ',' << rep.complexity.c_tilde << ','
       << (rep.complexity.mode == complexity_mode::exact ? "exact" : "greedy-bound") << ','
       << rep.homology.rank << ',';
    for (size_t i = 0; i < rep.homology.torsion.size(); ++i)
        os << (i ? ";" : "") << rep.homology.torsion[i].str();
    os << ',' << rep.homology.torsion_order().str() << ',';
    if (rep.upper_formula) os << *rep.upper_formula;
    else os << "n/a";
    std::string match = "n/a";
    for (const auto& c : rep.checks)
        if (c.name == "dunwoody_formula") match = c.pass ? "true" : "false";
    os << ',' << match << ',' << rep.lower.value << ',' << (rep.lower.applicable ? "true" : "false");
    int passed = 0, failed = 0;
    for (const auto& c : rep.checks) (c.pass ? passed : failed)++;
    os << ',' << passed << ',' << failed << ',';
    for (size_t i = 0; i < rep.flags.size(); ++i) os << (i ? ";" : "") << rep.flags[i];
    return os.str();
}

inline std::string to_markdown(const analysis_report& rep) {
    std::ostringstream os;
    const auto& p = rep.params;
    os << "## H(" << p.a << "," << p.b << "," << p.c << "," << p.n << "," << p.r << "," << p.s
       << ")   d=" << p.d << "\n\n";
    const auto& q = rep.equivalent;
    os << "- equivalent parameters: H(" << q.a << "," << q.b << "," << q.c << "," << q.n << ","
       << q.r << "," << q.s << ")\n";
    os << "- genus: " << rep.genus << "\n";
    os << "- C' system: " << rep.cprime_class.label() << ", " << rep.cprime_count << " curves\n";
    os << "- C'' system: " << rep.csecond_class.label() << ", " << rep.csecond_count
       << " curves (crossings:";
    for (const auto& c : rep.curves)
        if (c.system == curve_system::csecond) os << ' ' << c.crossings;
    os << ")\n- boundary: ";
    if (rep.boundary.empty()) os << "closed";
    else {
        for (size_t i = 0; i < rep.boundary.size(); ++i)
            os << (i ? ", " : "") << "genus " << rep.boundary[i];
    }
    os << "\n- c(H) = " << rep.complexity.c_h << ", ctilde = " << rep.complexity.c_tilde << " ("
       << (rep.complexity.mode == complexity_mode::exact ? "exact" : "greedy bound")
       << "; witness: forest {";
    for (size_t i = 0; i < rep.complexity.witness.forest.size(); ++i)
        os << (i ? " " : "") << rep.complexity.witness.forest[i];
    os << "}, region " << rep.complexity.witness.region << ", n(R)=" << rep.complexity.witness.n_r
       << ", sum n(gamma)=" << rep.complexity.witness.sum_n_gamma << ")\n";
    os << "- H1: rank " << rep.homology.rank;
    if (rep.homology.torsion.empty()) os << ", no torsion";
    else {
        os << ", torsion";
        for (const auto& t : rep.homology.torsion) os << " Z_" << t.str();
        os << " (order " << rep.homology.torsion_order().str() << ")";
    }
    os << "\n- bounds: upper formula ";
    if (rep.upper_formula) os << *rep.upper_formula;
    else os << "n/a";
    os << ", engine ctilde " << rep.complexity.c_tilde << ", lower " << rep.lower.value
       << (rep.lower.applicable ? "" : " (conditional: irreducibility not assumed)") << "\n";
    for (const auto& f : rep.flags) os << "- note: " << f << "\n";
    if (rep.family) {
        os << "- family: " << rep.family->family << " (";
        bool first = true;
        for (const auto& [k, v] : rep.family->family_params) {
            os << (first ? "" : ", ") << k << "=" << v;
            first = false;
        }
        os << ")\n";
        for (const auto& note : rep.family->notes) os << "- family note: " << note << "\n";
    }
    if (!rep.checks.empty()) {
        os << "\n| check | expected | actual | pass |\n|---|---|---|---|\n";
        for (const auto& c : rep.checks)
            os << "| " << c.name << " | " << c.expected << " | " << c.actual << " | "
               << (c.pass ? "yes" : "NO") << " |\n";
    }
    return os.str();
}

}  // namespace dunwoody
