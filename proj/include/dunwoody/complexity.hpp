#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "dunwoody/reduction.hpp"

namespace dunwoody {

// c(H): singular vertices of the visible diagram.
inline int64 singular_count(const closed_diagram& cd) { return cd.active_vertex_count(); }

// n(gamma): distinct singular vertices on a C'' curve.  Every vertex is
// crossed exactly once, so this is the crossing count.
inline int64 curve_vertex_count(const closed_diagram& cd, int64 csecond_id) {
    return cd.csecond[static_cast<size_t>(csecond_id)].crossings();
}

// n(R) over the regions of the visible diagram; region ids are the smallest
// constituent face id.
inline std::vector<std::pair<int64, int64>> region_vertex_counts(const closed_diagram& cd) {
    std::vector<char> removed(cd.csecond.size(), 0);
    region_partition rp = merge_regions(cd, removed);
    std::vector<std::pair<int64, int64>> out;
    for (int64 rg = 0; rg < rp.region_count; ++rg)
        out.push_back({rp.region_id[static_cast<size_t>(rg)],
                       static_cast<int64>(rp.region_vertices[static_cast<size_t>(rg)].size())});
    return out;
}

struct complexity_witness {
    std::vector<int64> forest;  // removed C'' curve ids, sorted
    int64 region = -1;          // smallest face id of the best region
    int64 n_r = 0;
    int64 sum_n_gamma = 0;
};

enum class complexity_mode { exact, greedy_bound };

struct complexity_result {
    int64 c_h = 0;
    int64 c_tilde = 0;
    complexity_witness witness;
    complexity_mode mode = complexity_mode::exact;
};

struct complexity_options {
    int64 max_forests = default_forest_cap;
    bool force_greedy = false;
};

namespace detail {

// value of one (forest, best region) pair; regions of H_T are the full-map
// faces merged across removed curves
inline void score_forest(const closed_diagram& cd, const admissible_forest& f,
                         complexity_witness& best, bool& first) {
    std::vector<char> removed(cd.csecond.size(), 0);
    int64 sum = 0;
    for (int64 id : f.curves) {
        removed[static_cast<size_t>(id)] = 1;
        sum += curve_vertex_count(cd, id);
    }
    region_partition rp = merge_regions(cd, removed);
    int64 best_region = -1, best_nr = -1;
    for (int64 rg = 0; rg < rp.region_count; ++rg) {
        int64 nr = static_cast<int64>(rp.region_vertices[static_cast<size_t>(rg)].size());
        int64 rid = rp.region_id[static_cast<size_t>(rg)];
        if (nr > best_nr || (nr == best_nr && rid < best_region)) {
            best_nr = nr;
            best_region = rid;
        }
    }
    complexity_witness cand{f.curves, best_region, best_nr, sum};
    auto better = [&](const complexity_witness& x, const complexity_witness& y) {
        int64 ox = x.n_r + x.sum_n_gamma, oy = y.n_r + y.sum_n_gamma;
        if (ox != oy) return ox > oy;
        if (x.forest != y.forest) return x.forest < y.forest;  // lexicographically smallest
        return x.region < y.region;
    };
    if (first || better(cand, best)) {
        best = cand;
        first = false;
    }
}

}  // namespace detail

// Modified complexity of the (visible) diagram:
//   c~(H) = c(H) - max{ n(R) + sum n(gamma) : T admissible, R region of H_T }.
// Exact when forest enumeration completes under the cap, otherwise the
// greedy forest gives an upper bound on c~ and the result says so.
inline complexity_result modified_complexity(const closed_diagram& cd,
                                             complexity_options opt = {}) {
    complexity_result res;
    res.c_h = singular_count(cd);

    dual_graph g = dual_graph_of(cd, curve_system::csecond);
    std::vector<int64> weight(cd.csecond.size(), 0);
    for (size_t i = 0; i < cd.csecond.size(); ++i)
        weight[i] = cd.csecond[i].crossings();

    complexity_witness best;
    bool first = true;
    bool exact = false;
    if (!opt.force_greedy) {
        exact = enumerate_admissible_forests(g, opt.max_forests, [&](const admissible_forest& f) {
            detail::score_forest(cd, f, best, first);
        });
    }
    if (!exact) {
        best = {};
        first = true;
        detail::score_forest(cd, greedy_admissible_forest(g, weight), best, first);
        res.mode = complexity_mode::greedy_bound;
    } else {
        res.mode = complexity_mode::exact;
    }
    if (first) throw internal_error("modified_complexity: no admissible forest found");
    res.witness = best;
    res.c_tilde = res.c_h - (best.n_r + best.sum_n_gamma);
    if (res.c_tilde < 0 || res.c_tilde > res.c_h)
        throw internal_error("modified_complexity: result out of range");
    return res;
}

}  // namespace dunwoody
