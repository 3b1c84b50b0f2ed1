#pragma once

#include <vector>

#include "dunwoody/polynomial.hpp"

namespace dunwoody {

using intmat = std::vector<std::vector<bigint>>;

struct snf_result {
    int64 rank = 0;                     // number of nonzero invariant factors
    std::vector<bigint> invariant_factors;  // all of them, d_1 | d_2 | ...
    std::vector<bigint> torsion;            // the ones > 1
};

// Smith normal form by repeated pivoting on a minimal nonzero entry.
// Arbitrary precision throughout; returns the divisibility chain.
inline snf_result smith_normal_form(intmat m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    snf_result out;
    size_t k = 0;
    while (k < rows && k < cols) {
        // locate a minimal-magnitude nonzero pivot in the trailing block
        size_t pi = k, pj = k;
        bigint best = 0;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs_big(m[i][j]) < best)) {
                    best = abs_big(m[i][j]);
                    pi = i; pj = j;
                }
        if (best == 0) break;
        std::swap(m[pi], m[k]);
        if (pj != k)
            for (size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][k]);

        bool clean = true;
        for (size_t i = k + 1; i < rows; ++i)
            if (m[i][k] != 0) {
                bigint q = m[i][k] / m[k][k];
                for (size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
                if (m[i][k] != 0) clean = false;
            }
        for (size_t j = k + 1; j < cols; ++j)
            if (m[k][j] != 0) {
                bigint q = m[k][j] / m[k][k];
                for (size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
                if (m[k][j] != 0) clean = false;
            }
        if (!clean) continue;  // remainders shrank the entries; pivot again

        // enforce divisibility of the remaining block by the pivot
        bool redo = false;
        for (size_t i = k + 1; i < rows && !redo; ++i)
            for (size_t j = k + 1; j < cols && !redo; ++j)
                if (m[i][j] % m[k][k] != 0) {
                    for (size_t jj = k; jj < cols; ++jj) m[k][jj] += m[i][jj];
                    redo = true;
                }
        if (redo) continue;
        ++k;
    }
    out.rank = static_cast<int64>(k);
    for (size_t i = 0; i < k; ++i) {
        bigint d = abs_big(m[i][i]);
        out.invariant_factors.push_back(d);
        if (d > 1) out.torsion.push_back(d);
    }
    return out;
}

}  // namespace dunwoody
