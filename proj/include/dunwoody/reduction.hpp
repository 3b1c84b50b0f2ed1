#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dunwoody/surface.hpp"

namespace dunwoody {

struct forest_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An admissible graph T over the dual graph of C'': removing its curves
// reduces the system.  With V+ empty T is a maximal tree; otherwise T spans
// every vertex and each component tree contains exactly one vertex of V+.
struct admissible_forest {
    std::vector<int64> curves;  // sorted curve ids (edge set of T)
};

inline constexpr int64 default_forest_cap = 1000000;

// Enumerates every admissible forest, calling fn once per edge set.
// Returns false (without finishing) once more than `cap` forests were
// produced.  Enumeration order follows ascending edge ids, so edge sets
// come out deduplicated and in lexicographic order.
inline bool enumerate_admissible_forests(const dual_graph& g, int64 cap,
                                         const std::function<void(const admissible_forest&)>& fn) {
    const int64 W = g.vertex_count;
    const auto& edges = g.edges;
    std::vector<char> marked(static_cast<size_t>(W), 0);
    for (int64 v : g.positive_vertices) marked[static_cast<size_t>(v)] = 1;
    const bool has_positive = !g.positive_vertices.empty();
    const int64 target_components =
        has_positive ? static_cast<int64>(g.positive_vertices.size()) : 1;

    // union-find with explicit history so the search can backtrack
    std::vector<int64> parent(static_cast<size_t>(W));
    std::vector<int64> rank_(static_cast<size_t>(W), 0);
    std::vector<char> comp_marked(marked);
    for (int64 i = 0; i < W; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int64 x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };

    int64 emitted = 0;
    int64 components = W;
    std::vector<int64> chosen;
    bool ok = true;

    std::function<void(size_t)> rec = [&](size_t idx) {
        if (!ok) return;
        // feasibility: remaining edges must be able to shrink components enough
        int64 remaining = static_cast<int64>(edges.size() - idx);
        if (components - remaining > target_components) return;
        if (idx == edges.size()) {
            if (components != target_components) return;
            if (++emitted > cap) { ok = false; return; }
            admissible_forest f;
            f.curves = chosen;
            fn(f);
            return;
        }
        const auto& e = edges[idx];
        // include e if it keeps the forest acyclic and never joins two marked trees
        int64 ru = find(e.u), rv = find(e.v);
        if (ru != rv && !(has_positive && comp_marked[static_cast<size_t>(ru)] &&
                          comp_marked[static_cast<size_t>(rv)])) {
            if (rank_[static_cast<size_t>(ru)] < rank_[static_cast<size_t>(rv)]) std::swap(ru, rv);
            parent[static_cast<size_t>(rv)] = ru;
            bool bump = rank_[static_cast<size_t>(ru)] == rank_[static_cast<size_t>(rv)];
            if (bump) rank_[static_cast<size_t>(ru)] += 1;
            char old = comp_marked[static_cast<size_t>(ru)];
            comp_marked[static_cast<size_t>(ru)] =
                old | comp_marked[static_cast<size_t>(rv)];
            components -= 1;
            chosen.push_back(e.curve);

            rec(idx + 1);

            chosen.pop_back();
            components += 1;
            comp_marked[static_cast<size_t>(ru)] = old;
            if (bump) rank_[static_cast<size_t>(ru)] -= 1;
            parent[static_cast<size_t>(rv)] = rv;
        }
        rec(idx + 1);  // exclude e
    };
    rec(0);
    return ok;
}

inline std::vector<admissible_forest> admissible_forests(const dual_graph& g,
                                                         int64 cap = default_forest_cap) {
    std::vector<admissible_forest> out;
    if (!enumerate_admissible_forests(g, cap, [&](const admissible_forest& f) { out.push_back(f); }))
        throw forest_cap_exceeded("admissible forest count exceeds cap");
    return out;
}

// One admissible forest maximizing the total weight greedily (Kruskal on
// descending weights, then a fix-up pass connecting stranded unmarked
// trees).  Used as the fallback when exhaustive enumeration is off.
inline admissible_forest greedy_admissible_forest(const dual_graph& g,
                                                  const std::vector<int64>& weight) {
    const int64 W = g.vertex_count;
    std::vector<char> marked(static_cast<size_t>(W), 0);
    for (int64 v : g.positive_vertices) marked[static_cast<size_t>(v)] = 1;
    const bool has_positive = !g.positive_vertices.empty();

    detail::dsu uf(W);
    std::vector<char> comp_marked(marked);
    std::vector<size_t> order(g.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return weight[static_cast<size_t>(g.edges[x].curve)] >
               weight[static_cast<size_t>(g.edges[y].curve)];
    });
    admissible_forest f;
    auto try_edge = [&](const dual_graph::edge& e) {
        int64 ru = uf.find(e.u), rv = uf.find(e.v);
        if (ru == rv) return false;
        if (has_positive && comp_marked[static_cast<size_t>(ru)] &&
            comp_marked[static_cast<size_t>(rv)])
            return false;
        char m = comp_marked[static_cast<size_t>(ru)] | comp_marked[static_cast<size_t>(rv)];
        uf.unite(ru, rv);
        comp_marked[static_cast<size_t>(uf.find(ru))] = m;
        f.curves.push_back(e.curve);
        return true;
    };
    if (has_positive) {
        // grow trees outward from the marked vertices first, heaviest edges first
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t i : order) {
                const auto& e = g.edges[i];
                int64 ru = uf.find(e.u), rv = uf.find(e.v);
                if (ru == rv) continue;
                if (comp_marked[static_cast<size_t>(ru)] == comp_marked[static_cast<size_t>(rv)])
                    continue;  // marked+marked is illegal, unmarked+unmarked postponed
                if (try_edge(e)) grew = true;
            }
        }
    } else {
        for (size_t i : order) try_edge(g.edges[i]);
    }
    // validity check mirrors the enumeration's end condition
    std::vector<int64> roots;
    for (int64 v = 0; v < W; ++v)
        if (uf.find(v) == v) roots.push_back(v);
    int64 target = has_positive ? static_cast<int64>(g.positive_vertices.size()) : 1;
    if (static_cast<int64>(roots.size()) != target)
        throw internal_error("greedy forest failed to produce an admissible structure");
    std::sort(f.curves.begin(), f.curves.end());
    return f;
}

// The reduced sub-diagram H_T: same map, with the forest's curves switched
// off.  All engine operations see only the retained curves.
inline closed_diagram reduce(const closed_diagram& cd, const admissible_forest& forest) {
    closed_diagram out = cd;
    for (int64 id : forest.curves) {
        if (id < 0 || id >= static_cast<int64>(cd.csecond.size()) ||
            !cd.csecond_active[static_cast<size_t>(id)])
            throw internal_error("reduce: forest names a curve that is not active");
        out.csecond_active[static_cast<size_t>(id)] = 0;
    }
    return out;
}

}  // namespace dunwoody
