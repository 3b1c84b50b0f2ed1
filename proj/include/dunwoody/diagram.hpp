#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "dunwoody/planar.hpp"

namespace dunwoody {

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Parameter combinations whose diagram does not cut the surface into disks
// give the face tracer nothing to work with.
// TODO: represent annular regions explicitly so the single-bundle
// degenerate diagrams can be analyzed instead of rejected.
struct unsupported_diagram : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class curve_system : unsigned char { cprime, csecond };

struct curve_key {
    curve_system system;
    int64 index;
    bool operator==(const curve_key&) const = default;
    bool operator<(const curve_key& o) const {
        if (system != o.system) return system < o.system;
        return index < o.index;
    }
};

struct curve {
    int64 id;
    curve_system system;
    std::vector<int64> vertices;  // crossings in traversal order
    int64 crossings() const { return static_cast<int64>(vertices.size()); }
};

struct face {
    int64 id;
    std::vector<int64> darts;     // the sigma*alpha orbit
    std::vector<int64> vertices;  // distinct incident singular vertices, sorted
};

// Test hooks: the two orientation choices the construction leaves open.
// The shipped defaults are pinned by the calibration battery; flipping either
// one is used by tests to prove the battery actually detects it.
struct glue_convention {
    bool flip_external_enumeration = false;
    bool negate_twist = false;
};

// Closed Dunwoody diagram: the curves C' and C'' on the genus-n surface
// obtained by gluing circle C'_i onto circle C''_{i+s} so that slot p meets
// slot (p+r) mod d.  Since internal slots run counterclockwise and external
// slots clockwise, the identification reverses boundary orientation and the
// result is orientable.
//
// Vertices are the nd identified slot pairs; vertex (i,p) is the image of
// slot p of C'_i.  Each vertex carries four darts 4v+k with counterclockwise
// rotation k -> k+1 (mod 4):
//   k=0  along the C' curve towards slot p+1
//   k=1  the C'' arc attached on the external side
//   k=2  along the C' curve towards slot p-1
//   k=3  the C'' arc attached on the internal side
// The edge involution `alpha` carries the whole twist; sigma is uniform.
struct closed_diagram {
    dunwoody_params params;
    int64 vertex_count = 0;             // n * d
    std::vector<int64> alpha;           // dart involution, size 4*V
    std::vector<int64> dart_curve_id;   // C'' curve id for darts k in {1,3}; C' index for k in {0,2}
    std::vector<curve> cprime;          // n curves, curve i = glued circle i
    std::vector<curve> csecond;
    std::vector<int64> vertex_csecond;  // C'' curve through each vertex
    std::vector<int> vertex_sign;       // crossing sign of (C', C'') at each vertex
    std::vector<face> faces;            // faces of the full map
    std::vector<int64> dart_face;       // face id per dart
    std::vector<char> csecond_active;   // reduction mask; all 1 on a freshly glued diagram

    int64 genus() const { return params.n; }
    int64 edge_count() const { return 2 * vertex_count; }
    int64 dart_count() const { return 4 * vertex_count; }

    static int64 sigma(int64 dart) { return (dart & ~3LL) | ((dart + 1) & 3LL); }
    static int64 sigma_inv(int64 dart) { return (dart & ~3LL) | ((dart + 3) & 3LL); }
    static int64 vertex_of(int64 dart) { return dart >> 2; }

    int64 euler_characteristic() const {
        return vertex_count - edge_count() + static_cast<int64>(faces.size());
    }

    int64 cprime_index_of_vertex(int64 v) const { return v / params.d; }

    curve_key curve_of_dart(int64 dart) const {
        int k = static_cast<int>(dart & 3);
        if (k == 0 || k == 2) return {curve_system::cprime, vertex_of(dart) / params.d};
        return {curve_system::csecond, dart_curve_id[static_cast<size_t>(dart)]};
    }

    bool is_active(curve_key k) const {
        return k.system == curve_system::cprime || csecond_active[static_cast<size_t>(k.index)];
    }

    bool vertex_active(int64 v) const {
        return csecond_active[static_cast<size_t>(vertex_csecond[static_cast<size_t>(v)])];
    }

    int64 active_vertex_count() const {
        int64 k = 0;
        for (int64 v = 0; v < vertex_count; ++v)
            if (vertex_active(v)) ++k;
        return k;
    }

    std::vector<int64> active_csecond_ids() const {
        std::vector<int64> ids;
        for (int64 i = 0; i < static_cast<int64>(csecond.size()); ++i)
            if (csecond_active[static_cast<size_t>(i)]) ids.push_back(i);
        return ids;
    }
};

namespace detail {

inline void trace_faces(closed_diagram& cd) {
    const int64 nd = cd.dart_count();
    cd.dart_face.assign(static_cast<size_t>(nd), -1);
    cd.faces.clear();
    for (int64 start = 0; start < nd; ++start) {
        if (cd.dart_face[static_cast<size_t>(start)] >= 0) continue;
        face f;
        f.id = static_cast<int64>(cd.faces.size());
        int64 dart = start;
        do {
            cd.dart_face[static_cast<size_t>(dart)] = f.id;
            f.darts.push_back(dart);
            dart = closed_diagram::sigma(cd.alpha[static_cast<size_t>(dart)]);
        } while (dart != start);
        f.vertices.reserve(f.darts.size());
        for (int64 dd : f.darts) f.vertices.push_back(closed_diagram::vertex_of(dd));
        std::sort(f.vertices.begin(), f.vertices.end());
        f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
        cd.faces.push_back(std::move(f));
    }
}

}  // namespace detail

inline closed_diagram glue(const planar_diagram& pd, const dunwoody_params& p,
                           glue_convention cv = {}) {
    if (!(pd.params == p))
        throw internal_error("glue: planar diagram was built from different parameters");

    closed_diagram cd;
    cd.params = p;
    const int64 n = p.n, d = p.d;
    cd.vertex_count = n * d;
    const int64 twist = cv.negate_twist ? mod(-p.r, d) : p.r;

    // vertex id of the image of slot p on C'_i
    auto vertex_internal = [&](int64 i, int64 slot) { return i * d + slot; };
    // external slot (j,q) is identified with internal slot (j-s, q-twist)
    auto vertex_external = [&](int64 j, int64 q) {
        if (cv.flip_external_enumeration) q = mod(-q, d);
        return vertex_internal(mod(j - p.s, n), mod(q - twist, d));
    };

    cd.alpha.assign(static_cast<size_t>(cd.dart_count()), -1);
    auto link = [&](int64 x, int64 y) {
        if (cd.alpha[static_cast<size_t>(x)] != -1 || cd.alpha[static_cast<size_t>(y)] != -1)
            throw internal_error("glue: slot used twice while wiring arcs");
        cd.alpha[static_cast<size_t>(x)] = y;
        cd.alpha[static_cast<size_t>(y)] = x;
    };

    // C' curve edges between consecutive slots of each glued circle
    for (int64 i = 0; i < n; ++i)
        for (int64 s = 0; s < d; ++s)
            link(4 * vertex_internal(i, s) + 0, 4 * vertex_internal(i, mod(s + 1, d)) + 2);

    // one edge per planar arc; internal attachment uses dart k=3, external k=1
    auto end_dart = [&](const slot_ref& sr) {
        return sr.fam == circle_family::internal_
                   ? 4 * vertex_internal(sr.circle, sr.slot) + 3
                   : 4 * vertex_external(sr.circle, sr.slot) + 1;
    };
    for (const auto& arc : pd.arcs) link(end_dart(arc.from), end_dart(arc.to));

    for (int64 dd = 0; dd < cd.dart_count(); ++dd)
        if (cd.alpha[static_cast<size_t>(dd)] == -1)
            throw internal_error("glue: incomplete edge involution");

    // C' curves: glued circle i in increasing-slot orientation
    cd.cprime.resize(static_cast<size_t>(n));
    for (int64 i = 0; i < n; ++i) {
        curve& c = cd.cprime[static_cast<size_t>(i)];
        c.id = i;
        c.system = curve_system::cprime;
        c.vertices.resize(static_cast<size_t>(d));
        for (int64 s = 0; s < d; ++s) c.vertices[static_cast<size_t>(s)] = vertex_internal(i, s);
    }

    // C'' curves: orbits of "cross the arc, pass through the vertex".
    // Passing through flips dart type 1 <-> 3 (xor 2).  A crossing counts
    // +1 when the traversal leaves through the external-side dart, which by
    // the rotation above means the frame (C' out, C'' out) is positive.
    cd.dart_curve_id.assign(static_cast<size_t>(cd.dart_count()), -1);
    cd.vertex_csecond.assign(static_cast<size_t>(cd.vertex_count), -1);
    cd.vertex_sign.assign(static_cast<size_t>(cd.vertex_count), 0);
    for (int64 start = 0; start < cd.dart_count(); ++start) {
        int k = static_cast<int>(start & 3);
        if (k != 1 && k != 3) continue;
        if (cd.dart_curve_id[static_cast<size_t>(start)] != -1) continue;
        curve c;
        c.id = static_cast<int64>(cd.csecond.size());
        c.system = curve_system::csecond;
        int64 dart = start;
        do {
            cd.dart_curve_id[static_cast<size_t>(dart)] = c.id;
            int64 other = cd.alpha[static_cast<size_t>(dart)];
            cd.dart_curve_id[static_cast<size_t>(other)] = c.id;
            int64 out = other ^ 2;  // continue through the vertex
            int64 v = closed_diagram::vertex_of(out);
            if (cd.vertex_csecond[static_cast<size_t>(v)] != -1)
                throw internal_error("glue: vertex crossed twice while tracing C''");
            cd.vertex_csecond[static_cast<size_t>(v)] = c.id;
            cd.vertex_sign[static_cast<size_t>(v)] = ((out & 3) == 1) ? 1 : -1;
            c.vertices.push_back(v);
            dart = out;
        } while (dart != start);
        cd.csecond.push_back(std::move(c));
    }
    for (int64 v = 0; v < cd.vertex_count; ++v)
        if (cd.vertex_csecond[static_cast<size_t>(v)] == -1)
            throw internal_error("glue: vertex missed by C'' tracing");

    cd.csecond_active.assign(cd.csecond.size(), 1);

    detail::trace_faces(cd);
    // A correct wiring can only fall short of genus n, and it does exactly
    // when some diagram complement region is not a disk (too few arcs to
    // cut the handles).  Degenerate single-bundle parameter combinations
    // hit this; the face machinery has nothing to stand on there.
    if (cd.euler_characteristic() > 2 - 2 * n)
        throw unsupported_diagram(
            "H(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) +
            "," + std::to_string(p.n) + "," + std::to_string(p.r) + "," + std::to_string(p.s) +
            ") is not a cellular diagram on the genus-" + std::to_string(n) + " surface");
    if (cd.euler_characteristic() < 2 - 2 * n)
        throw internal_error("glue: Euler characteristic " +
                             std::to_string(cd.euler_characteristic()) + " below " +
                             std::to_string(2 - 2 * n) + "; wiring corrupted");
    return cd;
}

inline closed_diagram build_diagram(const dunwoody_params& p, glue_convention cv = {}) {
    return glue(build_planar(p), p, cv);
}

// The index rotation i -> i+1 on circles is a map automorphism; verified
// dart by dart.
inline bool has_cyclic_symmetry(const closed_diagram& cd) {
    const int64 n = cd.params.n, d = cd.params.d;
    auto shift = [&](int64 dart) {
        int64 v = closed_diagram::vertex_of(dart);
        int64 i = v / d, s = v % d;
        return 4 * (mod(i + 1, n) * d + s) + (dart & 3);
    };
    for (int64 dd = 0; dd < cd.dart_count(); ++dd)
        if (cd.alpha[static_cast<size_t>(shift(dd))] != shift(cd.alpha[static_cast<size_t>(dd)]))
            return false;
    return true;
}

inline int64 euler_characteristic(const closed_diagram& cd) { return cd.euler_characteristic(); }

inline int64 genus_of(const closed_diagram& cd) {
    int64 chi = cd.euler_characteristic();
    if (mod(chi, 2) != 0) throw internal_error("odd Euler characteristic: map corrupted");
    return (2 - chi) / 2;
}

}  // namespace dunwoody
