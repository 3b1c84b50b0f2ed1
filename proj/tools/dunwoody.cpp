// Command-line front end: analyze parameter tuples, build the named
// manifold families, sweep parameter grids, run the calibration battery.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>
#include <unistd.h>

#include "dunwoody/dunwoody.hpp"
#include "dunwoody/report.hpp"

using namespace dunwoody;

namespace {

enum class output_format { md, json, csv };

output_format resolve_format(const std::string& flag) {
    std::string v = flag;
    if (v.empty()) {
        if (const char* env = std::getenv("DUNWOODY_FORMAT")) v = env;
    }
    if (v == "json") return output_format::json;
    if (v == "csv") return output_format::csv;
    if (v == "md") return output_format::md;
    if (!v.empty()) throw CLI::ValidationError("--format", "expected json, csv or md");
    return isatty(STDOUT_FILENO) ? output_format::md : output_format::json;
}

void print_report(const analysis_report& rep, output_format fmt) {
    switch (fmt) {
        case output_format::json: std::cout << to_json(rep).dump(2) << "\n"; break;
        case output_format::csv:
            std::cout << csv_header() << "\n" << csv_row(rep) << "\n";
            break;
        case output_format::md: std::cout << to_markdown(rep); break;
    }
}

// grid axis: "3", "1,2,5", "0..4", or "all" (r over Z_d, s over Z_n)
struct axis_spec {
    std::vector<int64> values;
    bool all = false;
};

axis_spec parse_axis(const std::string& text) {
    axis_spec ax;
    if (text == "all") {
        ax.all = true;
        return ax;
    }
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t dots = tok.find("..");
        try {
            if (dots != std::string::npos) {
                int64 lo = std::stoll(tok.substr(0, dots));
                int64 hi = std::stoll(tok.substr(dots + 2));
                for (int64 v = lo; v <= hi; ++v) ax.values.push_back(v);
            } else if (!tok.empty()) {
                ax.values.push_back(std::stoll(tok));
            }
        } catch (const std::exception&) {
            throw CLI::ValidationError("grid", "bad axis token '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ax;
}

struct sweep_row {
    int64 a, b, c, n, r, s;
    std::optional<analysis_report> report;
    std::string error;
};

int run_sweep(const std::vector<axis_spec>& axes, int jobs, analyze_options opt,
              output_format fmt) {
    std::vector<sweep_row> rows;
    for (int64 a : axes[0].values)
        for (int64 b : axes[1].values)
            for (int64 c : axes[2].values)
                for (int64 n : axes[3].values) {
                    if (n < 1 || 2 * a + b + c <= 0) continue;
                    int64 d = 2 * a + b + c;
                    std::vector<int64> rs = axes[4].all
                                                ? [&] { std::vector<int64> v; for (int64 r = 0; r < d; ++r) v.push_back(r); return v; }()
                                                : axes[4].values;
                    std::vector<int64> ss = axes[5].all
                                                ? [&] { std::vector<int64> v; for (int64 s = 0; s < n; ++s) v.push_back(s); return v; }()
                                                : axes[5].values;
                    for (int64 r : rs)
                        for (int64 s : ss) rows.push_back({a, b, c, n, r, s, std::nullopt, ""});
                }

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            auto& row = rows[i];
            try {
                row.report = analyze(validate_params(row.a, row.b, row.c, row.n, row.r, row.s), opt);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    if (jobs > 1) {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    } else {
        worker();
    }

    size_t failures = 0;
    if (fmt == output_format::json) {
        json arr = json::array();
        for (const auto& row : rows) {
            if (row.report) {
                arr.push_back(to_json(*row.report));
            } else {
                ++failures;
                arr.push_back(json{{"params", json{{"a", row.a}, {"b", row.b}, {"c", row.c},
                                                   {"n", row.n}, {"r", row.r}, {"s", row.s}}},
                                   {"error", row.error}});
            }
        }
        std::cout << arr.dump(2) << "\n";
    } else if (fmt == output_format::csv) {
        std::cout << csv_header() << ",error\n";
        for (const auto& row : rows) {
            if (row.report) {
                std::cout << csv_row(*row.report) << ",\n";
            } else {
                ++failures;
                std::cout << row.a << ',' << row.b << ',' << row.c << ',' << row.n << ',' << row.r
                          << ',' << row.s;
                const std::string header = csv_header();
                long blanks = std::count(header.begin(), header.end(), ',') - 5;
                for (long i = 0; i < blanks; ++i) std::cout << ',';
                std::cout << ",\"" << row.error << "\"\n";
            }
        }
    } else {
        std::cout << "| a | b | c | n | r | s | class C'' | cH | ctilde | mode | H1 | formula | "
                     "match |\n|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& row : rows) {
            if (!row.report) {
                ++failures;
                std::cout << "| " << row.a << " | " << row.b << " | " << row.c << " | " << row.n
                          << " | " << row.r << " | " << row.s << " | error: " << row.error
                          << " | | | | | | |\n";
                continue;
            }
            const auto& rep = *row.report;
            std::string match = "n/a";
            for (const auto& ch : rep.checks)
                if (ch.name == "dunwoody_formula") match = ch.pass ? "true" : "false";
            std::cout << "| " << row.a << " | " << row.b << " | " << row.c << " | " << row.n
                      << " | " << row.r << " | " << row.s << " | " << rep.csecond_class.label()
                      << " | " << rep.complexity.c_h << " | " << rep.complexity.c_tilde << " | "
                      << (rep.complexity.mode == complexity_mode::exact ? "exact" : "greedy")
                      << " | " << rep.homology.torsion_order().str() << " | "
                      << (rep.upper_formula ? std::to_string(*rep.upper_formula) : "n/a") << " | "
                      << match << " |\n";
        }
    }
    return (!rows.empty() && failures == rows.size()) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed Dunwoody diagrams: modified Heegaard complexity and homology bounds"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format_flag;
    int64 max_forests = default_forest_cap;
    bool greedy = false, assume_irreducible = false;
    app.add_option("--format", format_flag, "output format: json, csv or md");
    app.add_option("--max-forests", max_forests, "cap on admissible-forest enumeration");
    app.add_flag("--greedy", greedy, "skip enumeration; report a greedy upper bound on ctilde");
    app.add_flag("--assume-irreducible", assume_irreducible,
                 "assert the manifold is closed, irreducible and not exceptional; "
                 "activates the homology lower bound");

    auto* cmd_analyze = app.add_subcommand("analyze", "analyze one parameter tuple");
    std::vector<int64> tuple;
    cmd_analyze->add_option("params", tuple, "a b c n r s")->expected(6);

    auto* cmd_family = app.add_subcommand("family", "analyze a named manifold family instance");
    cmd_family->require_subcommand(1);
    int64 f_alpha = 0, f_beta = 0, f_n = 0, f_s = 0, f_p = 0, f_q = 0, f_l = 0;
    int64 f_k = 0, f_q1 = 0, f_case = 0, f_case_s = 0;
    bool search_s = false;
    std::optional<int64> f_monodromy;
    std::string variant = "reduced";

    auto* f2bk = cmd_family->add_subcommand("2bk", "cyclic branched cover of a 2-bridge knot");
    f2bk->add_option("--alpha", f_alpha)->required();
    f2bk->add_option("--beta", f_beta)->required();
    f2bk->add_option("--n", f_n)->required();
    f2bk->add_option("--s", f_monodromy, "shift (skips the homology search)");
    f2bk->add_flag("--search-s", search_s, "search the shift by the homology oracle (default)");
    f2bk->add_option("--variant", variant, "parametrization: reduced (default) or direct");

    auto* f2bl = cmd_family->add_subcommand("2bl", "cyclic branched cover of a 2-bridge link");
    f2bl->add_option("--alpha", f_alpha)->required();
    f2bl->add_option("--beta", f_beta)->required();
    f2bl->add_option("--n", f_n)->required();
    f2bl->add_option("--s", f_s)->required();

    auto* ftheta = cmd_family->add_subcommand("theta", "cyclic branched cover of a theta graph");
    ftheta->add_option("--alpha", f_alpha)->required();
    ftheta->add_option("--beta", f_beta)->required();
    ftheta->add_option("--n", f_n)->required();
    ftheta->add_option("--s", f_s)->required();

    auto* fseif = cmd_family->add_subcommand("seifert", "Seifert manifolds over the sphere");
    fseif->add_option("--p", f_p)->required();
    fseif->add_option("--q", f_q)->required();
    fseif->add_option("--l", f_l)->required();
    fseif->add_option("--n", f_n)->required();

    auto* ftorus = cmd_family->add_subcommand("torus", "cyclic branched cover of a torus knot");
    ftorus->add_option("--case", f_case, "parameter case 1, 2 or 3")->required();
    ftorus->add_option("--k", f_k);
    ftorus->add_option("--q", f_q)->required();
    ftorus->add_option("--q1", f_q1);
    ftorus->add_option("--s", f_case_s, "the case-3 parameter s");
    ftorus->add_option("--n", f_n)->required();
    ftorus->add_option("--monodromy", f_monodromy, "shift (skips the homology search)");

    auto* cmd_sweep = app.add_subcommand("sweep", "analyze a parameter grid");
    std::string ax_a = "0", ax_b = "0", ax_c = "0", ax_n = "2", ax_r = "all", ax_s = "all";
    int jobs = 1;
    cmd_sweep->add_option("--a", ax_a, "axis: N, N..M, N,M,..., or all");
    cmd_sweep->add_option("--b", ax_b, "axis spec");
    cmd_sweep->add_option("--c", ax_c, "axis spec");
    cmd_sweep->add_option("--n", ax_n, "axis spec");
    cmd_sweep->add_option("--r", ax_r, "axis spec; all = 0..d-1 per tuple");
    cmd_sweep->add_option("--s", ax_s, "axis spec; all = 0..n-1 per tuple");
    cmd_sweep->add_option("--jobs", jobs, "worker threads");

    auto* cmd_calibrate =
        app.add_subcommand("calibrate", "run the convention-pinning battery");
    (void)cmd_calibrate;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    analyze_options opt{max_forests, greedy, assume_irreducible};
    try {
        output_format fmt = resolve_format(format_flag);
        if (cmd_analyze->parsed()) {
            auto rep = analyze(
                validate_params(tuple[0], tuple[1], tuple[2], tuple[3], tuple[4], tuple[5]), opt);
            print_report(rep, fmt);
            return 0;
        }
        if (cmd_family->parsed()) {
            family_spec fs;
            if (f2bk->parsed()) {
                knot_cover_variant kv = variant == "direct" ? knot_cover_variant::direct
                                                            : knot_cover_variant::reduced;
                fs = two_bridge_knot_cover(f_alpha, f_beta, f_n, f_monodromy, kv);
            } else if (f2bl->parsed()) {
                fs = two_bridge_link_cover(f_alpha, f_beta, f_n, f_s);
            } else if (ftheta->parsed()) {
                fs = theta_cover(f_alpha, f_beta, f_n, f_s);
            } else if (fseif->parsed()) {
                fs = seifert(f_p, f_q, f_l, f_n);
            } else {
                fs = torus_knot_cover(static_cast<int>(f_case), {f_k, f_q, f_q1, f_case_s}, f_n,
                                      f_monodromy);
            }
            print_report(analyze_family(fs, opt), fmt);
            return 0;
        }
        if (cmd_sweep->parsed()) {
            std::vector<axis_spec> axes = {parse_axis(ax_a), parse_axis(ax_b), parse_axis(ax_c),
                                           parse_axis(ax_n), parse_axis(ax_r), parse_axis(ax_s)};
            for (size_t i = 0; i < 4; ++i)
                if (axes[i].all)
                    throw CLI::ValidationError("sweep", "'all' is only meaningful for --r and --s");
            return run_sweep(axes, jobs, opt, fmt);
        }
        if (cmd_calibrate->parsed()) {
            return run_calibration(std::cout) ? 0 : 3;
        }
    } catch (const param_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 1;
    } catch (const family_error& e) {
        std::cerr << "family error: " << e.what() << "\n";
        return 1;
    } catch (const unsupported_diagram& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 1;
    } catch (const oracle_error& e) {
        std::cerr << "oracle error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
