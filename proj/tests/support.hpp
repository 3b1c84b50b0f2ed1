#pragma once

// Test-side oracles, kept independent of the library's computation paths.

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "dunwoody/dunwoody.hpp"

namespace testsupport {

using namespace dunwoody;

// Invariant factors via the quotient of minor gcds: d_k = D_k / D_{k-1}
// where D_k is the gcd of all k x k minors.  Exponential; for small
// matrices only.
inline std::vector<bigint> minor_gcd_invariant_factors(const intmat& m) {
    const int64 rows = static_cast<int64>(m.size());
    const int64 cols = rows ? static_cast<int64>(m[0].size()) : 0;
    auto det = [&](const std::vector<int64>& ri, const std::vector<int64>& ci) {
        // Laplace expansion, fine for k <= 5
        std::function<bigint(std::vector<int64>, std::vector<int64>)> go =
            [&](std::vector<int64> rs, std::vector<int64> cs) -> bigint {
            if (rs.empty()) return 1;
            bigint acc = 0;
            int sign = 1;
            for (size_t j = 0; j < cs.size(); ++j) {
                std::vector<int64> rs2(rs.begin() + 1, rs.end());
                std::vector<int64> cs2;
                for (size_t t = 0; t < cs.size(); ++t)
                    if (t != j) cs2.push_back(cs[t]);
                acc += sign * m[static_cast<size_t>(rs[0])][static_cast<size_t>(cs[j])] * go(rs2, cs2);
                sign = -sign;
            }
            return acc;
        };
        return go(ri, ci);
    };
    auto gcd_of_minors = [&](int64 k) {
        bigint g = 0;
        std::vector<int64> ri(static_cast<size_t>(k)), ci(static_cast<size_t>(k));
        std::function<void(int64, int64)> pick_cols = [&](int64 idx, int64 from) {
            if (g == 1) return;
            if (idx == k) {
                bigint d = det(ri, ci);
                g = boost::multiprecision::gcd(g, abs_big(d));
                return;
            }
            for (int64 c = from; c < cols; ++c) {
                ci[static_cast<size_t>(idx)] = c;
                pick_cols(idx + 1, c + 1);
            }
        };
        std::function<void(int64, int64)> pick_rows = [&](int64 idx, int64 from) {
            if (g == 1) return;
            if (idx == k) {
                pick_cols(0, 0);
                return;
            }
            for (int64 r = from; r < rows; ++r) {
                ri[static_cast<size_t>(idx)] = r;
                pick_rows(idx + 1, r + 1);
            }
        };
        pick_rows(0, 0);
        return g;
    };
    std::vector<bigint> factors;
    bigint prev = 1;
    for (int64 k = 1; k <= std::min(rows, cols); ++k) {
        bigint dk = gcd_of_minors(k);
        if (dk == 0) break;
        factors.push_back(dk / prev);
        prev = dk;
    }
    return factors;
}

// Modified complexity straight from the definition: enumerate all curve
// subsets, keep the admissible ones, reduce, and take the best region of
// each reduced sub-diagram.  Region merging and admissibility use their own
// union-find code.
inline int64 brute_force_ctilde(const closed_diagram& cd) {
    int64 m = static_cast<int64>(cd.csecond.size());
    if (m > 20) throw std::runtime_error("brute_force_ctilde: diagram too large");
    dual_graph g = dual_graph_of(cd, curve_system::csecond);
    std::set<int64> pos(g.positive_vertices.begin(), g.positive_vertices.end());
    int64 best = -1;
    for (int64 mask = 0; mask < (1LL << m); ++mask) {
        std::vector<int64> par(static_cast<size_t>(g.vertex_count));
        for (size_t i = 0; i < par.size(); ++i) par[i] = static_cast<int64>(i);
        std::function<int64(int64)> find = [&](int64 x) {
            while (par[static_cast<size_t>(x)] != x) x = par[static_cast<size_t>(x)] =
                par[static_cast<size_t>(par[static_cast<size_t>(x)])];
            return x;
        };
        bool acyclic = true;
        for (const auto& e : g.edges) {
            if (!((mask >> e.curve) & 1)) continue;
            int64 u = find(e.u), v = find(e.v);
            if (u == v) { acyclic = false; break; }
            par[static_cast<size_t>(u)] = v;
        }
        if (!acyclic) continue;
        std::map<int64, std::pair<int64, int64>> comp;  // root -> (vertices, marked)
        for (int64 v = 0; v < g.vertex_count; ++v) {
            auto& c = comp[find(v)];
            c.first++;
            c.second += pos.count(v) ? 1 : 0;
        }
        bool admissible = true;
        if (pos.empty()) {
            admissible = comp.size() == 1;
        } else {
            for (const auto& [root, c] : comp)
                if (c.second != 1) admissible = false;
        }
        if (!admissible) continue;

        std::vector<int64> fpar(cd.faces.size());
        for (size_t i = 0; i < fpar.size(); ++i) fpar[i] = static_cast<int64>(i);
        std::function<int64(int64)> ffind = [&](int64 x) {
            while (fpar[static_cast<size_t>(x)] != x) x = fpar[static_cast<size_t>(x)] =
                fpar[static_cast<size_t>(fpar[static_cast<size_t>(x)])];
            return x;
        };
        for (int64 dd = 0; dd < cd.dart_count(); ++dd) {
            int k = static_cast<int>(dd & 3);
            if (k != 1 && k != 3) continue;
            if ((mask >> cd.dart_curve_id[static_cast<size_t>(dd)]) & 1) {
                int64 u = ffind(cd.dart_face[static_cast<size_t>(dd)]);
                int64 v = ffind(cd.dart_face[static_cast<size_t>(cd.alpha[static_cast<size_t>(dd)])]);
                if (u != v) fpar[static_cast<size_t>(u)] = v;
            }
        }
        std::map<int64, std::set<int64>> region_vertices;
        for (size_t f = 0; f < cd.faces.size(); ++f)
            for (int64 v : cd.faces[f].vertices)
                if (!((mask >> cd.vertex_csecond[static_cast<size_t>(v)]) & 1))
                    region_vertices[ffind(static_cast<int64>(f))].insert(v);
        int64 best_region = 0;
        for (const auto& [root, vs] : region_vertices)
            best_region = std::max(best_region, static_cast<int64>(vs.size()));
        int64 removed = 0;
        for (int64 i = 0; i < m; ++i)
            if ((mask >> i) & 1) removed += cd.csecond[static_cast<size_t>(i)].crossings();
        best = std::max(best, best_region + removed);
    }
    if (best < 0) throw std::runtime_error("brute_force_ctilde: no admissible subset");
    return cd.vertex_count - best;
}

// Valid parameters drawn uniformly from a small box, resampled until the
// diagram is cellular.
template <typename Rng>
dunwoody_params random_cellular_params(Rng& rng, int64 max_abc = 3, int64 max_n = 5) {
    for (;;) {
        int64 a = static_cast<int64>(rng() % (max_abc + 1));
        int64 b = static_cast<int64>(rng() % (max_abc + 1));
        int64 c = static_cast<int64>(rng() % (max_abc + 1));
        if (2 * a + b + c == 0) continue;
        int64 n = 1 + static_cast<int64>(rng() % max_n);
        int64 d = 2 * a + b + c;
        int64 r = static_cast<int64>(rng() % d);
        int64 s = static_cast<int64>(rng() % n);
        auto p = validate_params(a, b, c, n, r, s);
        try {
            build_diagram(p);
            return p;
        } catch (const unsupported_diagram&) {
            continue;
        }
    }
}

}  // namespace testsupport
