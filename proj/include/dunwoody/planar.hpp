#pragma once

#include <cassert>
#include <vector>

#include "dunwoody/params.hpp"

namespace dunwoody {

// The planar stage of the construction: 2n labelled circles (n internal,
// n external), each carrying d vertex slots, joined by nd arcs.  The circle
// C'_i meets C'_{i+1} with a arcs, C''_i with c arcs and C''_{i-1} with b
// arcs; the external row mirrors this.
//
// Slot convention (fixed once, verified by the calibration battery):
//   internal circle, slots counted counterclockwise --
//     [0, a)            a-arcs to C'_{i-1}
//     [a, a+b)          b-arcs to C''_{i-1}
//     [a+b, a+b+c)      c-arcs to C''_i
//     [a+b+c, d)        a-arcs to C'_{i+1}
//   external circle, slots counted clockwise --
//     [0, a)            a-arcs to C''_{i-1}
//     [a, a+c)          c-arcs to C'_i
//     [a+c, a+b+c)      b-arcs to C'_{i+1}
//     [a+b+c, d)        a-arcs to C''_{i+1}
// Parallel arcs of one bundle attach in nested order, so the drawing is
// planar; the glued map checks V - E + F = 2 - 2n at construction time.

enum class circle_family : unsigned char { internal_, external_ };

enum class arc_type : unsigned char {
    inner_rail,   // a arcs between internal circles
    outer_rail,   // a arcs between external circles
    radial,       // c arcs between C'_i and C''_i
    diagonal,     // b arcs between C'_i and C''_{i-1}
};

struct slot_ref {
    circle_family fam;
    int64 circle;  // 0..n-1
    int64 slot;    // 0..d-1
    bool operator==(const slot_ref&) const = default;
};

struct planar_arc {
    arc_type type;
    slot_ref from, to;
};

struct planar_diagram {
    dunwoody_params params;
    std::vector<planar_arc> arcs;  // nd arcs, each slot hit exactly once

    int64 circle_count() const { return 2 * params.n; }
    int64 slots_per_circle() const { return params.d; }
    int64 slot_count() const { return 2 * params.n * params.d; }

    int64 count(arc_type t) const {
        int64 k = 0;
        for (const auto& a : arcs)
            if (a.type == t) ++k;
        return k;
    }
};

inline planar_diagram build_planar(const dunwoody_params& p) {
    planar_diagram pd;
    pd.params = p;
    const int64 n = p.n, d = p.d, a = p.a, b = p.b, c = p.c;
    pd.arcs.reserve(static_cast<size_t>(n * d));

    auto internal_slot = [](int64 i, int64 s) { return slot_ref{circle_family::internal_, i, s}; };
    auto external_slot = [](int64 i, int64 s) { return slot_ref{circle_family::external_, i, s}; };

    for (int64 i = 0; i < n; ++i) {
        int64 inext = mod(i + 1, n), iprev = mod(i - 1, n);
        // a arcs C'_i -- C'_{i+1}: slot a+b+c+t meets slot a-1-t on the next circle
        for (int64 t = 0; t < a; ++t)
            pd.arcs.push_back({arc_type::inner_rail,
                               internal_slot(i, a + b + c + t),
                               internal_slot(inext, a - 1 - t)});
        // b arcs C'_i -- C''_{i-1}: slot a+t meets slot a+c+t
        for (int64 t = 0; t < b; ++t)
            pd.arcs.push_back({arc_type::diagonal,
                               internal_slot(i, a + t),
                               external_slot(iprev, a + c + t)});
        // c arcs C'_i -- C''_i: slot a+b+t meets slot a+t
        for (int64 t = 0; t < c; ++t)
            pd.arcs.push_back({arc_type::radial,
                               internal_slot(i, a + b + t),
                               external_slot(i, a + t)});
        // a arcs C''_i -- C''_{i+1}: slot a+b+c+t meets slot a-1-t
        for (int64 t = 0; t < a; ++t)
            pd.arcs.push_back({arc_type::outer_rail,
                               external_slot(i, a + b + c + t),
                               external_slot(inext, a - 1 - t)});
    }
    assert(static_cast<int64>(pd.arcs.size()) == n * d);
    return pd;
}

}  // namespace dunwoody
