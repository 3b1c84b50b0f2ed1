#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dunwoody/homology.hpp"
#include "dunwoody/surface.hpp"

namespace dunwoody {

struct family_error : std::invalid_argument {
    enum class code {
        not_a_knot,
        not_a_link,
        gcd_error,
        zero_monodromy,
        bad_monodromy,
        case_mismatch,
        precondition_violated,
        no_matching_monodromy,
    };
    code reason;
    family_error(code c, const std::string& msg) : std::invalid_argument(msg), reason(c) {}
};

// Declarative expectations attached to a family instance; the analyzer
// evaluates them against the engine and reports pass/fail, never asserts.
struct family_spec {
    std::string family;
    std::vector<std::pair<std::string, int64>> family_params;
    dunwoody_params params;

    std::optional<int64> upper_bound;
    bool upper_equality_expected = false;  // == expected, otherwise only <=

    std::optional<double> lower_bound_formula;      // classical closed form
    std::optional<double> lower_bound_alternate;  // second reading where ambiguous

    std::optional<bigint> torsion_order_formula;    // classical closed form
    std::optional<bigint> torsion_order_derived;  // independently derived value
    std::optional<int64> h1_rank_expected;

    std::optional<int64> curve_count_expected;
    // (crossings per curve, how many curves) pairs
    std::vector<std::pair<int64, int64>> crossing_profile_expected;
    std::optional<std::vector<int64>> boundary_expected;

    std::optional<int64> selected_s;  // monodromy chosen by oracle search
    std::vector<std::string> notes;
};

namespace detail {

inline double log5(double x) { return std::log(x) / std::log(5.0); }

inline void require(bool ok, family_error::code c, const std::string& msg) {
    if (!ok) throw family_error(c, msg);
}

// Engine H1 against the covering-space oracle.
inline bool h1_matches(const homology_group& h, const bigint& order, int64 zero_roots) {
    if (h.rank != zero_roots) return false;
    return zero_roots > 0 || h.torsion_order() == order;
}

// All shifts s for which the glued diagram's H1 matches the oracle.
inline std::vector<int64> matching_shifts(const dunwoody_params& base, const bigint& order,
                                          int64 zero_roots) {
    std::vector<int64> out;
    for (int64 s = 0; s < base.n; ++s) {
        dunwoody_params p = validate_params(base.a, base.b, base.c, base.n, base.r, s);
        if (h1_matches(h1(build_diagram(p)), order, zero_roots)) out.push_back(s);
    }
    return out;
}

}  // namespace detail

enum class knot_cover_variant {
    reduced,  // the a=(alpha-1)/2, b=0, c=1 parametrization (diagram is reduced)
    direct,   // the a=beta, b=alpha-2beta, c=1 parametrization
};

// n-fold cyclic branched covering of the 2-bridge knot b(alpha, beta).
// The reduced parametrization leaves the shift open, so it is recovered by
// matching H1 against the Alexander-polynomial oracle unless the caller
// fixes it.
inline family_spec two_bridge_knot_cover(int64 alpha, int64 beta, int64 n,
                                         std::optional<int64> shift = std::nullopt,
                                         knot_cover_variant variant = knot_cover_variant::reduced) {
    detail::require(alpha % 2 == 1, family_error::code::not_a_knot,
                    "b(alpha,beta) is a knot only for odd alpha");
    detail::require(alpha >= 3 && beta > 0 && beta < alpha, family_error::code::precondition_violated,
                    "need 0 < beta < alpha, alpha >= 3");
    detail::require(gcd64(alpha, beta) == 1, family_error::code::gcd_error,
                    "gcd(alpha, beta) must be 1");
    detail::require(n >= 2, family_error::code::precondition_violated, "need n >= 2");

    family_spec fs;
    fs.family = "two_bridge_knot";
    fs.family_params = {{"alpha", alpha}, {"beta", beta}, {"n", n}};
    cover_h1 oracle = branched_cover_h1_order(alpha, beta, n);
    fs.torsion_order_derived = oracle.zero_roots ? oracle.torsion_part : oracle.order;
    fs.h1_rank_expected = oracle.zero_roots;
    if (oracle.zero_roots) fs.notes.push_back("H1 is infinite; torsion value from the nonvanishing factors only");

    if (variant == knot_cover_variant::direct) {
        detail::require(alpha > 2 * beta, family_error::code::precondition_violated,
                        "direct parametrization needs beta < alpha/2 (take the mirror)");
        // the shift convention of this construction runs against the slot
        // labels, hence the sign flip relative to (-1)^beta
        int64 s = mod(beta % 2 == 0 ? -1 : 1, n);
        fs.params = validate_params(beta, alpha - 2 * beta, 1, n, 2 * beta + 1, s);
        fs.notes.push_back("direct parametrization: diagram is never reduced (twist is -b)");
        return fs;
    }

    int64 beta_even = beta % 2 == 0 ? beta : alpha - beta;  // mirror image
    dunwoody_params base = validate_params((alpha - 1) / 2, 0, 1, n, beta_even / 2, 0);
    if (shift) {
        fs.params = validate_params(base.a, base.b, base.c, n, base.r, *shift);
    } else {
        auto hits = detail::matching_shifts(base, fs.torsion_order_derived.value(),
                                            oracle.zero_roots);
        detail::require(!hits.empty(), family_error::code::no_matching_monodromy,
                        "no shift reproduces the oracle homology; pass --s explicitly");
        fs.params = validate_params(base.a, base.b, base.c, n, base.r, hits.front());
        fs.selected_s = hits.front();
        if (hits.size() > 1) {
            std::ostringstream os;
            os << "several shifts match the homology oracle:";
            for (int64 s : hits) os << ' ' << s;
            fs.notes.push_back(os.str());
        }
    }

    if (n > 2) {
        fs.upper_bound = n * (alpha - 2);
        fs.upper_equality_expected = n > 3;
    } else {
        fs.notes.push_back("n = 2 is outside the stated range of the upper bound");
    }

    if (beta == 1 || beta == alpha - 1) {
        // Brieskorn case: homology lower bound with d = gcd(alpha, n)
        int64 d = gcd64(alpha, n);
        if (n > 2) {
            if (n % 2 == 1) {
                fs.lower_bound_formula = 2.0 * (d - 1) * detail::log5(2.0) - 1.0;
            } else {
                fs.lower_bound_formula = 2.0 * detail::log5(static_cast<double>(alpha) / d) + d - 2.0;
                fs.lower_bound_alternate =
                    2.0 * detail::log5(static_cast<double>(n) / d) + d - 2.0;
                fs.notes.push_back(
                    "even-n lower bound stated with alpha/d; the n/d reading is reported alongside");
            }
        }
    }
    return fs;
}

// n-fold cyclic branched covering of the 2-component 2-bridge link
// b(alpha, beta) with monodromy (1, s).
inline family_spec two_bridge_link_cover(int64 alpha, int64 beta, int64 n, int64 s) {
    detail::require(alpha % 2 == 0, family_error::code::not_a_link,
                    "b(alpha,beta) is a 2-component link only for even alpha");
    detail::require(alpha >= 2 && beta > 0 && beta < alpha, family_error::code::precondition_violated,
                    "need 0 < beta < alpha");
    detail::require(gcd64(alpha, beta) == 1, family_error::code::gcd_error,
                    "gcd(alpha, beta) must be 1");
    detail::require(n >= 2, family_error::code::precondition_violated, "need n >= 2");
    s = mod(s, n);
    detail::require(s != 0, family_error::code::zero_monodromy, "monodromy s must be nonzero mod n");

    family_spec fs;
    fs.family = "two_bridge_link";
    fs.family_params = {{"alpha", alpha}, {"beta", beta}, {"n", n}, {"s", s}};

    // this construction's shift runs against the slot labels, so the
    // monodromy enters negated; mirroring beta negates it once more
    int64 beta2 = beta, s2 = mod(-s, n);
    if (2 * beta2 > alpha) {
        beta2 = alpha - beta2;
        s2 = mod(s, n);
        fs.notes.push_back("mirrored to beta < alpha/2 with reversed monodromy");
    }
    fs.params = validate_params(beta2, alpha - 2 * beta2, 1, n, 2 * beta2 + 1, s2);

    int64 g = gcd64(n, s);
    fs.curve_count_expected = n + g;
    if (n / g == alpha) {
        fs.crossing_profile_expected = {{alpha, n + g}};
    } else {
        fs.crossing_profile_expected = {{n / g, g}, {alpha, n}};
    }
    fs.upper_bound = n * (alpha - 2) + n / g - alpha;
    fs.boundary_expected = std::vector<int64>{};  // closed manifold

    if ((beta == 1 || beta == alpha - 1) && !(alpha == 2 && n == 3 && (s == 1 || s == 2))) {
        int64 D = gcd64(n, (alpha / 2) * (s - 1));
        int64 M = gcd64(n, s - 1);
        int64 h = gcd64(n, s);
        int64 m = gcd64(D, h);
        // |Tor| = M (nm/hD)^m (alpha M / 2D)^(M-1); integral on this family
        if ((n * m) % (h * D) == 0 && (alpha * M) % (2 * D) == 0) {
            bigint tor = M;
            for (int64 i = 0; i < m; ++i) tor *= bigint(n) * m / (h * D);
            for (int64 i = 0; i + 1 < M; ++i) tor *= bigint(alpha) * M / (2 * D);
            fs.torsion_order_derived = tor;
            fs.h1_rank_expected = D - M - m + 1;
            fs.lower_bound_formula = 2.0 * detail::log5(tor.convert_to<double>()) + D - M - m;
        }
    } else if (alpha == 2 && n == 3) {
        fs.notes.push_back("(n,s) = (3,1),(3,2) with alpha = 2 is excluded from the lower bound");
    }
    return fs;
}

// n-fold cyclic branched covering of the theta graph obtained from
// b(alpha, beta) by adding a tunnel; monodromy (1, s, s-1).
inline family_spec theta_cover(int64 alpha, int64 beta, int64 n, int64 s) {
    detail::require(alpha % 2 == 1, family_error::code::not_a_knot,
                    "theta graphs here come from 2-bridge knots (odd alpha)");
    detail::require(alpha >= 3 && beta > 0 && beta < alpha && gcd64(alpha, beta) == 1,
                    family_error::code::gcd_error, "need 0 < beta < alpha coprime");
    detail::require(n > 2, family_error::code::precondition_violated, "need n > 2");
    s = mod(s, n);
    detail::require(s != 0 && s != 1, family_error::code::bad_monodromy,
                    "monodromy s must avoid 0 and 1 mod n");

    family_spec fs;
    fs.family = "theta";
    fs.family_params = {{"alpha", alpha}, {"beta", beta}, {"n", n}, {"s", s}};

    int64 beta2 = beta, s2 = s;
    if (2 * beta2 > alpha) {  // mirror; the tunnel monodromy index shifts
        beta2 = alpha - beta2;
        s2 = mod(s - 1, n);
        fs.notes.push_back("mirrored to beta < alpha/2; shift adjusted to s-1");
    }
    fs.params = validate_params(beta2, alpha - 2 * beta2, 1, n, 2 * beta2 - alpha, s2);

    int64 nprime = gcd64(n, s) + gcd64(n, s - 1);
    fs.curve_count_expected = nprime;
    int64 genus = (1 + n - nprime) / 2;
    fs.boundary_expected = genus > 0 ? std::vector<int64>{genus, genus} : std::vector<int64>{};
    fs.upper_bound = n * (alpha - 1);
    return fs;
}

// Alexander polynomial of the (k,h) torus knot, as a product of cyclotomics.
inline intpoly torus_knot_alexander(int64 k, int64 h) {
    if (k < 2 || h < 2 || gcd64(k, h) != 1)
        throw oracle_error("torus_knot_alexander: need coprime k,h >= 2");
    intpoly delta{1};
    for (int64 e = 2; e <= k * h; ++e)
        if ((k * h) % e == 0 && k % e != 0 && h % e != 0) delta = delta * cyclotomic(e);
    return delta;
}

inline cover_h1 torus_cover_h1_order(int64 k, int64 h, int64 n) {
    intpoly delta = torus_knot_alexander(k, h);
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

struct torus_case_params {
    int64 k = 0, q = 0, q1 = 0, s = 0;
};

// n-fold cyclic branched coverings of torus knots, three parameter cases.
// Case 3's shift is not determined by the closed form; it is either given
// or recovered through the homology oracle.
inline family_spec torus_knot_cover(int caseno, torus_case_params cp, int64 n,
                                    std::optional<int64> shift = std::nullopt) {
    detail::require(n >= 2, family_error::code::precondition_violated, "need n >= 2");
    family_spec fs;
    fs.family = "torus_knot";
    int64 k = 0, h = 0;
    switch (caseno) {
        case 1:
            detail::require(cp.q > 0 && cp.k > 1, family_error::code::case_mismatch,
                            "case 1 needs q > 0, k > 1");
            k = cp.k;
            h = cp.q * cp.k + 1;
            fs.params = validate_params(1, cp.k - 2, (cp.k - 1) * (2 * cp.q - 1), n, cp.k, cp.k);
            fs.upper_bound = n * (2 * cp.q * cp.k - 2 * cp.q - 1);
            fs.family_params = {{"case", 1}, {"k", cp.k}, {"q", cp.q}, {"n", n}};
            break;
        case 2:
            detail::require(cp.q > 1 && cp.k > 1, family_error::code::case_mismatch,
                            "case 2 needs q > 1, k > 1");
            k = cp.k;
            h = cp.q * cp.k - 1;
            fs.params = validate_params(1, cp.k - 2, (cp.k - 1) * (2 * cp.q - 1) - 2, n,
                                        (cp.k - 1) * (2 * cp.q - 3), cp.k);
            fs.upper_bound = n * (2 * cp.q * cp.k - 2 * cp.q - 3);
            fs.family_params = {{"case", 2}, {"k", cp.k}, {"q", cp.q}, {"n", n}};
            break;
        case 3: {
            detail::require(cp.q > 0 && cp.q1 > 0 && cp.s > 1, family_error::code::case_mismatch,
                            "case 3 needs q, q1 > 0 and s > 1");
            k = cp.s * cp.q1 + 1;
            h = cp.q * k + cp.s;
            int64 a = cp.q1;
            int64 b = cp.q1 * (2 * cp.q * cp.q1 * (cp.s - 1) + 2 * cp.q + cp.s - 2);
            int64 c = 1 + (cp.s - 2) * cp.q1;
            int64 r = 2 * cp.q1 * cp.q1 * (cp.s - 1) + cp.s * cp.q1 + 1;
            cover_h1 oracle = torus_cover_h1_order(k, h, n);
            int64 smono;
            if (shift) {
                smono = *shift;
            } else {
                dunwoody_params base = validate_params(a, b, c, n, r, 0);
                auto hits = detail::matching_shifts(
                    base, oracle.zero_roots ? oracle.torsion_part : oracle.order, oracle.zero_roots);
                detail::require(!hits.empty(), family_error::code::no_matching_monodromy,
                                "no shift reproduces the oracle homology; pass --s explicitly");
                smono = hits.front();
                fs.selected_s = smono;
            }
            fs.params = validate_params(a, b, c, n, r, smono);
            fs.upper_bound = n * (2 * cp.q1 * (cp.s - 1) * (cp.q * cp.q1 + 1) + 2 * cp.q * cp.q1 - 1);
            fs.family_params = {{"case", 3}, {"q", cp.q}, {"q1", cp.q1}, {"s", cp.s}, {"n", n}};
            break;
        }
        default:
            throw family_error(family_error::code::case_mismatch, "torus case must be 1, 2 or 3");
    }
    fs.family_params.push_back({"torus_k", k});
    fs.family_params.push_back({"torus_h", h});
    cover_h1 oracle = torus_cover_h1_order(k, h, n);
    fs.torsion_order_derived = oracle.zero_roots ? oracle.torsion_part : oracle.order;
    fs.h1_rank_expected = oracle.zero_roots;
    fs.upper_equality_expected = n > 3;
    return fs;
}

// Seifert manifolds {Oo,0|-1; (p,q) x n, (l,l-1)}.
inline family_spec seifert(int64 p, int64 q, int64 l, int64 n) {
    detail::require(p > q && q > 0, family_error::code::precondition_violated, "need p > q > 0");
    detail::require(gcd64(p, q) == 1, family_error::code::gcd_error, "gcd(p,q) must be 1");
    detail::require(n > 1 && l > 0, family_error::code::precondition_violated, "need n > 1, l > 0");
    detail::require(!(n == 2 && l == 1), family_error::code::precondition_violated,
                    "l > 1 is required when n = 2");

    family_spec fs;
    fs.family = "seifert";
    fs.family_params = {{"p", p}, {"q", q}, {"l", l}, {"n", n}};
    if (p >= 2 * q)
        fs.params = validate_params(q, q * (n * l - 2), p - 2 * q, n, p - q, 0);
    else
        fs.params = validate_params(p - q, 2 * q - p, q * (n * l - 2), n, p - q, 1);
    fs.upper_bound = n * (p + q * (n * l - 2) - 2);
    fs.boundary_expected = std::vector<int64>{};

    bigint pp = p;
    bigint stated = ((n - 1) * l * q - p);
    bigint derived = (n * l * q - p);
    for (int64 i = 1; i < n; ++i) { stated *= pp; derived *= pp; }
    fs.torsion_order_formula = abs_big(stated);
    fs.torsion_order_derived = abs_big(derived);
    fs.h1_rank_expected = derived == 0 ? 1 : 0;
    if (stated != derived)
        fs.notes.push_back("the usual closed form uses (n-1)lq-p; direct abelianization gives nlq-p");
    if (derived == 0) fs.notes.push_back("H1 is infinite for these parameters");

    if (stated > 0)
        fs.lower_bound_formula = 2.0 * (n - 1) * detail::log5(static_cast<double>(p)) +
                               2.0 * detail::log5(stated.convert_to<double>()) - 1.0;
    if (derived > 0)
        fs.lower_bound_alternate = 2.0 * (n - 1) * detail::log5(static_cast<double>(p)) +
                                   2.0 * detail::log5(derived.convert_to<double>()) - 1.0;
    return fs;
}

// The closed-form upper bound for Dunwoody manifolds, by parameter case.
// Returns nothing when the twist hits -b (the diagram is then not reduced)
// or when no case row applies.  Meaningful only when the diagram actually
// is a Dunwoody manifold; callers gate on the classification.
inline std::optional<int64> dunwoody_formula_bound(const dunwoody_params& p, bool allow_flip = true) {
    if (p.n <= 1) return std::nullopt;
    const int64 d = p.d, n = p.n;
    auto is = [&](int64 r, int64 target) { return r == mod(target, d); };
    auto near = [&](int64 r, int64 target) {
        return is(r, target + 1) || is(r, target - 1);
    };
    auto k_of = [&](int64 target) {
        if (is(p.r, target)) return 2;
        if (near(p.r, target)) return 1;
        return 0;
    };

    if (p.a > 0 && p.b > 0 && p.c > 0) {  // case (i)
        if (is(p.r, -p.b)) return std::nullopt;
        int64 drop = near(p.r, -p.b) ? std::max<int64>(2 * n, 5) : std::max<int64>(2 * n, 6);
        return n * d - drop;
    }
    if (std::min(p.a, p.b + p.c) == 0) {  // case (ii)
        if (is(p.r, -p.b)) return std::nullopt;
        int64 v = n * (d - (near(p.r, -p.b) ? 3 : 4));
        if (v < 0) return std::nullopt;
        return v;
    }
    // case (iii): a > 0 and exactly one of b, c is zero
    if (n > 3) {
        if (is(p.r, -p.b)) return std::nullopt;
        return n * (d - 2);
    }
    int64 k0 = k_of(p.b), k1 = k_of(-p.b);
    if (p.b == 0 && p.s == 0)
        return n * (2 * p.a + p.c) - std::max(2 * n, 8 - 2 * k0);
    if (p.c == 0 && p.s == 0 && n == 2)
        return n * (2 * p.a + p.b) - std::max<int64>(2 * n, 8 - k0 - k1);
    if (p.c == 0 && p.s == 0 && n == 3)
        return n * (2 * p.a + p.b) - std::max<int64>(2 * n, 8 - k0);
    if (p.c == 0 && p.s == 1 && n == 3)
        return n * (2 * p.a + p.b) - std::max<int64>(2 * n, 8 - k1);
    // remaining shifts are reached through the parameter equivalence
    if (allow_flip) return dunwoody_formula_bound(equivalent_params(p), false);
    return std::nullopt;
}

}  // namespace dunwoody
