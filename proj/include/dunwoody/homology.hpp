#pragma once

#include <cmath>
#include <optional>

#include "dunwoody/diagram.hpp"
#include "dunwoody/smith.hpp"

namespace dunwoody {

struct oracle_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Abelianized Heegaard relators: rows are the active C'' curves, columns the
// C' curves, entry = signed crossing sum.  Orientations are the canonical
// traversal directions fixed at glue time.
inline intmat presentation_matrix(const closed_diagram& cd) {
    auto rows_ids = cd.active_csecond_ids();
    std::vector<int64> row_of(cd.csecond.size(), -1);
    for (size_t i = 0; i < rows_ids.size(); ++i)
        row_of[static_cast<size_t>(rows_ids[i])] = static_cast<int64>(i);
    intmat m(rows_ids.size(), std::vector<bigint>(static_cast<size_t>(cd.params.n), 0));
    for (int64 v = 0; v < cd.vertex_count; ++v) {
        int64 row = row_of[static_cast<size_t>(cd.vertex_csecond[static_cast<size_t>(v)])];
        if (row < 0) continue;
        m[static_cast<size_t>(row)][static_cast<size_t>(cd.cprime_index_of_vertex(v))] +=
            cd.vertex_sign[static_cast<size_t>(v)];
    }
    return m;
}

struct homology_group {
    int64 rank = 0;                 // free rank
    std::vector<bigint> torsion;    // divisibility chain, each > 1
    bigint torsion_order() const {
        bigint p = 1;
        for (const auto& t : torsion) p *= t;
        return p;
    }
    bool operator==(const homology_group&) const = default;
};

inline homology_group cokernel(const intmat& m, int64 generators) {
    snf_result s = smith_normal_form(m);
    homology_group h;
    h.rank = generators - s.rank;
    h.torsion = s.torsion;
    return h;
}

// H1 of the represented manifold; valid for bounded manifolds as well.
inline homology_group h1(const closed_diagram& cd) {
    return cokernel(presentation_matrix(cd), cd.params.n);
}

struct lower_bound {
    double value = 0.0;
    bool applicable = false;  // caller vouches for closed + irreducible + not exceptional
};

// Homology estimate 2*log5|Tor H1| + rank(H1) - 1, clamped at zero.  Only a
// genuine complexity bound for closed irreducible manifolds other than S^3,
// RP^3, L(3,1), S^2 x S^1; the flag records whether the caller asserts that.
inline lower_bound matveev_lower_bound(const homology_group& h, bool exception_flag) {
    double logtor = 0.0;
    for (const auto& t : h.torsion) logtor += std::log(t.convert_to<double>());
    double v = 2.0 * logtor / std::log(5.0) + static_cast<double>(h.rank) - 1.0;
    return {std::max(0.0, v), exception_flag};
}

struct torsion_split {
    bigint resultant;     // |Res(f, t^n - 1)|, zero when some factor vanishes
    bigint torsion_part;  // product of the nonvanishing cyclotomic resultants
    int64 zero_roots;     // number of n-th roots of unity killed by f (free rank)
};

// |Res(f(t), t^n - 1)| split into cyclotomic factors so vanishing factors
// can be reported as free rank instead of torsion.
inline torsion_split circulant_torsion(const intpoly& f, int64 n) {
    if (n < 1) throw oracle_error("circulant_torsion: n must be positive");
    torsion_split out{0, 1, 0};
    if (f.zero()) {
        out.zero_roots = n;
        return out;
    }
    for (int64 d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const intpoly& phi = cyclotomic(d);
        if (divides_monic(phi, f))
            out.zero_roots += phi.degree();
        else
            out.torsion_part *= abs_big(resultant(f, phi));
    }
    out.resultant = out.zero_roots ? bigint(0) : out.torsion_part;
    return out;
}

// -p + lq(t + ... + t^{n-1}), the circulant row of the Seifert family.
inline intpoly seifert_circulant_poly(int64 p, int64 q, int64 l, int64 n) {
    std::vector<bigint> c(static_cast<size_t>(n), bigint(l) * q);
    c[0] = -bigint(p);
    return intpoly(std::move(c));
}

// Alexander polynomial of the 2-bridge knot b(alpha, beta) in the standard
// exponent-sum form, normalized to a positive leading coefficient and zero
// trailing exponent.  beta is lifted to an odd representative first.
inline intpoly two_bridge_alexander(int64 alpha, int64 beta) {
    if (alpha % 2 == 0) throw oracle_error("two_bridge_alexander: alpha must be odd (knot case)");
    if (alpha < 1 || beta <= 0 || beta >= alpha || gcd64(alpha, beta) != 1)
        throw oracle_error("two_bridge_alexander: need 0 < beta < alpha with gcd(alpha,beta)=1");
    if (beta % 2 == 0) beta += alpha;
    std::map<int64, bigint> acc;
    int64 e = 0;
    acc[0] += 1;
    for (int64 i = 1; i < alpha; ++i) {
        e += (mod(i * beta, 2 * alpha) < alpha) ? 1 : -1;  // (-1)^floor(i*beta/alpha)
        acc[e] += (i % 2 == 0) ? 1 : -1;
    }
    int64 lo = acc.begin()->first, hi = acc.rbegin()->first;
    std::vector<bigint> c(static_cast<size_t>(hi - lo) + 1, 0);
    for (const auto& [exp, coef] : acc) c[static_cast<size_t>(exp - lo)] = coef;
    intpoly poly(std::move(c));
    if (!poly.zero() && poly.lead() < 0)
        for (auto& x : poly.c) x = -x;
    return poly;
}

// |H1| of the n-fold cyclic branched cover of b(alpha, beta), through the
// Alexander polynomial: product of |Res(Delta, Phi_d)| over d | n, d > 1.
// Vanishing factors are returned as free rank; order is then reported 0.
struct cover_h1 {
    bigint order;     // 0 when the group is infinite
    bigint torsion_part;
    int64 zero_roots;
};

inline cover_h1 branched_cover_h1_order(int64 alpha, int64 beta, int64 n) {
    if (n < 1) throw oracle_error("branched_cover_h1_order: n must be positive");
    intpoly delta = two_bridge_alexander(alpha, beta);
    cover_h1 out{1, 1, 0};
    for (int64 d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        const intpoly& phi = cyclotomic(d);
        if (divides_monic(phi, delta))
            out.zero_roots += phi.degree();
        else
            out.torsion_part *= abs_big(resultant(delta, phi));
    }
    out.order = out.zero_roots ? bigint(0) : out.torsion_part;
    return out;
}

}  // namespace dunwoody
