#pragma once

// Independent reference implementations used only by the tests.

#include "nolat/lattice.hpp"
#include "nolat/svp.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using nolat::RatMatrix;
using nolat::Rational;

/// Determinant by cofactor expansion along the first row.
inline Rational cofactor_det(const RatMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    Rational total;
    for (std::size_t c = 0; c < n; ++c) {
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c) minor(i - 1, k++) = a(i, j);
        const Rational term = a(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

/// Every nonzero u in [-box, box]^n with minimal u^T G u, canonical sign, sorted.
inline nolat::MinimalVectorSet box_scan(const nolat::Lattice& l, int box) {
    const std::size_t n = l.rank();
    std::vector<long long> u(n, -box);
    nolat::MinimalVectorSet out;
    bool have = false;
    while (true) {
        if (std::any_of(u.begin(), u.end(), [](long long x) { return x != 0; })) {
            const Rational q = l.norm_sq(u);
            if (!have || q < out.norm_sq) {
                out.norm_sq = q;
                out.pairs.clear();
                have = true;
            }
            if (q == out.norm_sq) out.pairs.push_back(nolat::canonical_sign(u));
        }
        std::size_t i = 0;
        while (i < n && u[i] == box) u[i++] = -box;
        if (i == n) break;
        ++u[i];
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
    return out;
}

}  // namespace oracle
