#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "dunwoody/params.hpp"

namespace dunwoody {

using bigint = boost::multiprecision::cpp_int;

// Dense integer polynomial, coefficient of t^i at index i.
struct intpoly {
    std::vector<bigint> c;

    intpoly() = default;
    intpoly(std::initializer_list<bigint> il) : c(il) { trim(); }
    explicit intpoly(std::vector<bigint> v) : c(std::move(v)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int64 degree() const { return static_cast<int64>(c.size()) - 1; }
    const bigint& lead() const { return c.back(); }
    bigint at(int64 i) const {
        return (i >= 0 && i < static_cast<int64>(c.size())) ? c[static_cast<size_t>(i)] : bigint(0);
    }
    bigint eval(const bigint& x) const {
        bigint v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }
    bool operator==(const intpoly& o) const { return c == o.c; }
};

inline intpoly operator+(const intpoly& a, const intpoly& b) {
    std::vector<bigint> v(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
    return intpoly(std::move(v));
}

inline intpoly operator-(const intpoly& a, const intpoly& b) {
    std::vector<bigint> v(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) v[i] -= b.c[i];
    return intpoly(std::move(v));
}

inline intpoly operator*(const intpoly& a, const intpoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<bigint> v(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    return intpoly(std::move(v));
}

// t^n - 1
inline intpoly t_power_minus_one(int64 n) {
    std::vector<bigint> v(static_cast<size_t>(n) + 1, 0);
    v[0] = -1;
    v[static_cast<size_t>(n)] = 1;
    return intpoly(std::move(v));
}

// Exact division by a monic divisor; throws when the division leaves a
// remainder (callers use it only where exactness is guaranteed).
inline intpoly divide_exact_monic(intpoly num, const intpoly& den) {
    if (den.zero() || den.lead() != 1) throw internal_error("divide_exact_monic: divisor not monic");
    if (num.zero()) return {};
    int64 dn = num.degree(), dd = den.degree();
    if (dn < dd) throw internal_error("divide_exact_monic: degree underflow");
    std::vector<bigint> q(static_cast<size_t>(dn - dd) + 1, 0);
    while (!num.zero() && num.degree() >= dd) {
        int64 shift = num.degree() - dd;
        bigint coef = num.lead();
        q[static_cast<size_t>(shift)] = coef;
        for (int64 i = 0; i <= dd; ++i)
            num.c[static_cast<size_t>(shift + i)] -= coef * den.at(i);
        num.trim();
    }
    if (!num.zero()) throw internal_error("divide_exact_monic: nonzero remainder");
    return intpoly(std::move(q));
}

// True iff den | num over Z (den monic).
inline bool divides_monic(const intpoly& den, intpoly num) {
    if (num.zero()) return true;
    int64 dd = den.degree();
    while (!num.zero() && num.degree() >= dd) {
        int64 shift = num.degree() - dd;
        bigint coef = num.lead();
        for (int64 i = 0; i <= dd; ++i)
            num.c[static_cast<size_t>(shift + i)] -= coef * den.at(i);
        num.trim();
    }
    return num.zero();
}

// Cyclotomic polynomial, memoized: Phi_n = (t^n - 1) / prod_{d|n, d<n} Phi_d.
inline const intpoly& cyclotomic(int64 n) {
    static std::map<int64, intpoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    intpoly num = t_power_minus_one(n);
    for (int64 d = 1; d < n; ++d)
        if (n % d == 0) num = divide_exact_monic(std::move(num), cyclotomic(d));
    return cache.emplace(n, std::move(num)).first->second;
}

// Determinant by fraction-free (Bareiss) elimination.
inline bigint determinant(std::vector<std::vector<bigint>> m) {
    const size_t k = m.size();
    if (k == 0) return 1;
    bigint prev = 1;
    int sign = 1;
    for (size_t col = 0; col + 1 < k; ++col) {
        size_t piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            sign = -sign;
        }
        for (size_t i = col + 1; i < k; ++i) {
            for (size_t j = col + 1; j < k; ++j) {
                bigint num = m[i][j] * m[col][col] - m[i][col] * m[col][j];
                m[i][j] = num / prev;  // divides exactly (Bareiss)
            }
            m[i][col] = 0;
        }
        prev = m[col][col];
    }
    return sign > 0 ? m[k - 1][k - 1] : -m[k - 1][k - 1];
}

// Res(f, g) via the Sylvester matrix; exact over Z.
inline bigint resultant(const intpoly& f, const intpoly& g) {
    if (f.zero() || g.zero()) return 0;
    int64 m = f.degree(), n = g.degree();
    if (m == 0) {
        bigint r = 1;
        for (int64 i = 0; i < n; ++i) r *= f.c[0];
        return r;
    }
    if (n == 0) {
        bigint r = 1;
        for (int64 i = 0; i < m; ++i) r *= g.c[0];
        return r;
    }
    size_t k = static_cast<size_t>(m + n);
    std::vector<std::vector<bigint>> syl(k, std::vector<bigint>(k, 0));
    for (int64 row = 0; row < n; ++row)
        for (int64 i = 0; i <= m; ++i)
            syl[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = f.at(m - i);
    for (int64 row = 0; row < m; ++row)
        for (int64 i = 0; i <= n; ++i)
            syl[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = g.at(n - i);
    return determinant(std::move(syl));
}

inline bigint abs_big(const bigint& x) { return x < 0 ? bigint(-x) : x; }

}  // namespace dunwoody
