#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "dunwoody/diagram.hpp"

namespace dunwoody {

namespace detail {

struct dsu {
    std::vector<int64> parent;
    explicit dsu(int64 k) : parent(static_cast<size_t>(k)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int64 find(int64 x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int64 a, int64 b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace detail

struct cut_component {
    int64 id = 0;
    int64 euler = 0;             // of the compact piece, boundary included
    int64 boundary_circles = 0;
    int64 genus = 0;
    std::vector<int64> faces;              // full-map faces inside the piece
    std::vector<int64> interior_vertices;  // vertices not on any cut curve
};

struct cut_result {
    std::vector<cut_component> components;
    std::vector<int64> component_of_face;

    const cut_component& component_of(int64 face_id) const {
        return components[static_cast<size_t>(component_of_face[static_cast<size_t>(face_id)])];
    }
};

// Components of the surface cut along the given curves, with Euler
// characteristic, boundary count and genus per piece.  Bookkeeping runs on
// the full map's cells: cut edges and cut-curve vertices are counted once
// per side.
inline cut_result cut_along(const closed_diagram& cd, const std::vector<curve_key>& cut_set) {
    const int64 F = static_cast<int64>(cd.faces.size());
    std::vector<char> cut_cprime(static_cast<size_t>(cd.params.n), 0);
    std::vector<char> cut_csecond(cd.csecond.size(), 0);
    for (const auto& k : cut_set) {
        if (k.system == curve_system::cprime)
            cut_cprime[static_cast<size_t>(k.index)] = 1;
        else
            cut_csecond[static_cast<size_t>(k.index)] = 1;
    }
    auto dart_cut = [&](int64 dart) {
        curve_key k = cd.curve_of_dart(dart);
        return k.system == curve_system::cprime ? cut_cprime[static_cast<size_t>(k.index)] != 0
                                                : cut_csecond[static_cast<size_t>(k.index)] != 0;
    };

    detail::dsu uf(F);
    for (int64 dd = 0; dd < cd.dart_count(); ++dd) {
        int64 other = cd.alpha[static_cast<size_t>(dd)];
        if (dd < other && !dart_cut(dd))
            uf.unite(cd.dart_face[static_cast<size_t>(dd)], cd.dart_face[static_cast<size_t>(other)]);
    }

    cut_result res;
    std::vector<int64> comp_id(static_cast<size_t>(F), -1);
    res.component_of_face.assign(static_cast<size_t>(F), -1);
    for (int64 f = 0; f < F; ++f) {
        int64 root = uf.find(f);
        if (comp_id[static_cast<size_t>(root)] == -1) {
            comp_id[static_cast<size_t>(root)] = static_cast<int64>(res.components.size());
            res.components.push_back({});
            res.components.back().id = comp_id[static_cast<size_t>(root)];
        }
        int64 c = comp_id[static_cast<size_t>(root)];
        res.component_of_face[static_cast<size_t>(f)] = c;
        res.components[static_cast<size_t>(c)].faces.push_back(f);
    }
    auto comp_of_dart = [&](int64 dart) {
        return res.component_of_face[static_cast<size_t>(cd.dart_face[static_cast<size_t>(dart)])];
    };

    std::vector<int64> chi(res.components.size(), 0);
    for (const auto& comp : res.components)
        chi[static_cast<size_t>(comp.id)] += static_cast<int64>(comp.faces.size());

    // edges: one per piece if interior, one copy per side if cut
    for (int64 dd = 0; dd < cd.dart_count(); ++dd) {
        int64 other = cd.alpha[static_cast<size_t>(dd)];
        if (dd > other) continue;
        if (dart_cut(dd)) {
            chi[static_cast<size_t>(comp_of_dart(dd))] -= 1;
            chi[static_cast<size_t>(comp_of_dart(other))] -= 1;
        } else {
            chi[static_cast<size_t>(comp_of_dart(dd))] -= 1;
        }
    }

    // vertices: interior 1 copy, on one cut curve 2 copies (the sides), on
    // two cut curves 4 corner copies.  corner(t) lies in face(sigma(t)).
    for (int64 v = 0; v < cd.vertex_count; ++v) {
        bool cp = cut_cprime[static_cast<size_t>(cd.cprime_index_of_vertex(v))] != 0;
        bool cs = cut_csecond[static_cast<size_t>(cd.vertex_csecond[static_cast<size_t>(v)])] != 0;
        int64 base = 4 * v;
        if (!cp && !cs) {
            int64 c = comp_of_dart(base);
            chi[static_cast<size_t>(c)] += 1;
            res.components[static_cast<size_t>(c)].interior_vertices.push_back(v);
        } else if (cp != cs) {
            // t runs over the two darts of the cut curve; each side is the
            // pair of corners between t and sigma^2(t)
            int64 t = cp ? base + 0 : base + 1;
            chi[static_cast<size_t>(comp_of_dart(closed_diagram::sigma(t)))] += 1;
            chi[static_cast<size_t>(comp_of_dart(closed_diagram::sigma(t ^ 2)))] += 1;
        } else {
            for (int k = 0; k < 4; ++k)
                chi[static_cast<size_t>(comp_of_dart(closed_diagram::sigma(base + k)))] += 1;
        }
    }

    // boundary circles: orbits of the left-hand walk on cut darts
    std::vector<int64> boundary(res.components.size(), 0);
    std::vector<char> seen(static_cast<size_t>(cd.dart_count()), 0);
    for (int64 start = 0; start < cd.dart_count(); ++start) {
        if (seen[static_cast<size_t>(start)] || !dart_cut(start)) continue;
        int64 dart = start;
        do {
            seen[static_cast<size_t>(dart)] = 1;
            int64 t = cd.alpha[static_cast<size_t>(dart)];
            do {
                t = closed_diagram::sigma(t);
            } while (!dart_cut(t));
            dart = t;
        } while (dart != start);
        boundary[static_cast<size_t>(comp_of_dart(start))] += 1;
    }

    for (auto& comp : res.components) {
        comp.euler = chi[static_cast<size_t>(comp.id)];
        comp.boundary_circles = boundary[static_cast<size_t>(comp.id)];
        int64 twice_genus = 2 - comp.euler - comp.boundary_circles;
        if (twice_genus < 0 || (twice_genus & 1))
            throw internal_error("cut_along: component genus is not a non-negative integer");
        comp.genus = twice_genus / 2;
    }
    return res;
}

inline std::vector<curve_key> all_curves(const closed_diagram& cd, curve_system sys) {
    std::vector<curve_key> keys;
    if (sys == curve_system::cprime) {
        for (int64 i = 0; i < cd.params.n; ++i) keys.push_back({sys, i});
    } else {
        for (int64 i : cd.active_csecond_ids()) keys.push_back({sys, i});
    }
    return keys;
}

inline cut_result cut_along_system(const closed_diagram& cd, curve_system sys) {
    return cut_along(cd, all_curves(cd, sys));
}

struct system_class {
    bool proper = false;
    bool reduced = false;
    const char* label() const {
        if (proper && reduced) return "proper-reduced";
        if (!proper && reduced) return "nonproper-reduced";
        if (proper && !reduced) return "proper-nonreduced";
        return "nonproper-nonreduced";
    }
};

inline system_class classify(const cut_result& cut) {
    system_class sc;
    bool any_zero = false, all_zero = true;
    for (const auto& c : cut.components) {
        if (c.genus == 0) any_zero = true;
        else all_zero = false;
    }
    sc.proper = all_zero;
    sc.reduced = cut.components.size() == 1 || !any_zero;
    return sc;
}

inline system_class classify(const closed_diagram& cd, curve_system sys) {
    return classify(cut_along_system(cd, sys));
}

// Genera of the negative boundary left after compressing along the active
// C'' system: one closed component per positive-genus cut piece.  Empty
// means the manifold is closed.
inline std::vector<int64> boundary_profile(const closed_diagram& cd) {
    std::vector<int64> genera;
    for (const auto& c : cut_along_system(cd, curve_system::csecond).components)
        if (c.genus > 0) genera.push_back(c.genus);
    std::sort(genera.begin(), genera.end());
    return genera;
}

// Dual graph of a curve system: one vertex per cut piece, one edge per
// curve joining the pieces on its two sides (loops and parallels allowed).
struct dual_graph {
    struct edge {
        int64 curve;  // curve id within its system
        int64 u, v;   // incident pieces
    };
    int64 vertex_count = 0;
    std::vector<edge> edges;
    std::vector<int64> piece_genus;
    std::vector<int64> positive_vertices;  // V^+: pieces of positive genus
};

inline dual_graph dual_graph_of(const closed_diagram& cd, curve_system sys) {
    cut_result cut = cut_along_system(cd, sys);
    dual_graph g;
    g.vertex_count = static_cast<int64>(cut.components.size());
    for (const auto& c : cut.components) {
        g.piece_genus.push_back(c.genus);
        if (c.genus > 0) g.positive_vertices.push_back(c.id);
    }
    for (const auto& k : all_curves(cd, sys)) {
        const curve& c = k.system == curve_system::cprime
                             ? cd.cprime[static_cast<size_t>(k.index)]
                             : cd.csecond[static_cast<size_t>(k.index)];
        int64 dart = k.system == curve_system::cprime ? 4 * c.vertices.front() + 0
                                                      : 4 * c.vertices.front() + 1;
        int64 other = cd.alpha[static_cast<size_t>(dart)];
        int64 u = cut.component_of_face[static_cast<size_t>(cd.dart_face[static_cast<size_t>(dart)])];
        int64 v = cut.component_of_face[static_cast<size_t>(cd.dart_face[static_cast<size_t>(other)])];
        g.edges.push_back({k.index, u, v});
    }
    return g;
}

// Regions of the sub-diagram obtained by ignoring the C'' curves flagged in
// `removed` (in addition to curves already inactive): full-map faces merged
// across every edge of an ignored curve.
struct region_partition {
    int64 region_count = 0;
    std::vector<int64> region_of_face;                  // merged region per full face
    std::vector<int64> region_id;                       // region -> smallest face id
    std::vector<std::vector<int64>> region_vertices;    // distinct surviving vertices
};

inline region_partition merge_regions(const closed_diagram& cd, const std::vector<char>& removed) {
    auto ignored = [&](int64 curve_id) {
        return !cd.csecond_active[static_cast<size_t>(curve_id)] ||
               removed[static_cast<size_t>(curve_id)];
    };
    const int64 F = static_cast<int64>(cd.faces.size());
    detail::dsu uf(F);
    for (int64 dd = 0; dd < cd.dart_count(); ++dd) {
        int64 other = cd.alpha[static_cast<size_t>(dd)];
        if (dd > other) continue;
        int k = static_cast<int>(dd & 3);
        if (k != 1 && k != 3) continue;
        if (ignored(cd.dart_curve_id[static_cast<size_t>(dd)]))
            uf.unite(cd.dart_face[static_cast<size_t>(dd)], cd.dart_face[static_cast<size_t>(other)]);
    }
    region_partition rp;
    rp.region_of_face.assign(static_cast<size_t>(F), -1);
    std::vector<int64> idx(static_cast<size_t>(F), -1);
    for (int64 f = 0; f < F; ++f) {
        int64 root = uf.find(f);
        if (idx[static_cast<size_t>(root)] == -1) {
            idx[static_cast<size_t>(root)] = rp.region_count++;
            rp.region_id.push_back(f);  // faces scanned in order: first is smallest
            rp.region_vertices.push_back({});
        }
        rp.region_of_face[static_cast<size_t>(f)] = idx[static_cast<size_t>(root)];
    }
    for (int64 f = 0; f < F; ++f) {
        auto& verts = rp.region_vertices[static_cast<size_t>(rp.region_of_face[static_cast<size_t>(f)])];
        for (int64 v : cd.faces[static_cast<size_t>(f)].vertices)
            if (!ignored(cd.vertex_csecond[static_cast<size_t>(v)])) verts.push_back(v);
    }
    for (auto& verts : rp.region_vertices) {
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    }
    return rp;
}

}  // namespace dunwoody
