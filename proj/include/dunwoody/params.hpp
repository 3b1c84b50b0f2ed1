#pragma once

#include <stdexcept>
#include <string>

namespace dunwoody {

using int64 = long long;

// Euclidean remainder, always in [0, m).
inline int64 mod(int64 x, int64 m) {
    int64 v = x % m;
    return v < 0 ? v + m : v;
}

inline int64 gcd64(int64 a, int64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { int64 t = a % b; a = b; b = t; }
    return a;
}

struct param_error : std::invalid_argument {
    enum class code { non_positive_n, zero_d, negative_multiplicity };
    code reason;
    param_error(code c, const std::string& msg) : std::invalid_argument(msg), reason(c) {}
};

// The six defining integers of a Dunwoody diagram.  a, b, c are arc
// multiplicities, n the number of circle pairs (= genus of the glued
// surface), r the twist and s the shift of the boundary identification.
// r and s are stored reduced mod d = 2a+b+c and mod n respectively.
struct dunwoody_params {
    int64 a = 0, b = 0, c = 0;
    int64 n = 1;
    int64 r = 0, s = 0;
    int64 d = 0;  // 2a + b + c

    bool operator==(const dunwoody_params&) const = default;
};

inline dunwoody_params validate_params(int64 a, int64 b, int64 c, int64 n, int64 r, int64 s) {
    if (n <= 0)
        throw param_error(param_error::code::non_positive_n,
                          "n must be positive, got " + std::to_string(n));
    if (a < 0 || b < 0 || c < 0)
        throw param_error(param_error::code::negative_multiplicity,
                          "arc multiplicities must be non-negative");
    int64 d = 2 * a + b + c;
    if (d == 0)
        throw param_error(param_error::code::zero_d, "d = 2a+b+c must be positive");
    dunwoody_params p;
    p.a = a; p.b = b; p.c = c;
    p.n = n; p.d = d;
    p.r = mod(r, d);
    p.s = mod(s, n);
    return p;
}

// The diagrams H(a,b,c,n,r,s) and H(a,c,b,n,d-r,n-s-1) are isomorphic and
// represent the same manifold.  Applying this twice gives back the input.
inline dunwoody_params equivalent_params(const dunwoody_params& p) {
    return validate_params(p.a, p.c, p.b, p.n, p.d - p.r, p.n - p.s - 1);
}

}  // namespace dunwoody
