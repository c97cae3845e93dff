#include "nolat/simplex.hpp"

#include "nolat/error.hpp"

namespace nolat {

LpResult simplex_maximize(const RatMatrix& a, const RatVector& b, const RatVector& c) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m || c.size() != n) throw Error(Errc::DimensionMismatch, "LP shapes");
    for (const auto& v : b)
        if (v.sign() < 0) throw Error(Errc::InvalidArgument, "LP right-hand side must be nonnegative");

    // Tableau columns: n structural, m slack, then rhs. Last row is the
    // objective row in the form  z - c^T x = 0.
    const std::size_t width = n + m + 1;
    RatMatrix t(m + 1, width);
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) t(r, j) = a(r, j);
        t(r, n + r) = 1;
        t(r, width - 1) = b[r];
        basis[r] = n + r;
    }
    for (std::size_t j = 0; j < n; ++j) t(m, j) = -c[j];

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (t(m, j).sign() < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t r = 0; r < m; ++r) {
            if (t(r, enter).sign() <= 0) continue;
            const Rational ratio = t(r, width - 1) / t(r, enter);
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == m) return LpResult{LpResult::Status::Unbounded, Rational(0), {}};

        const Rational inv = Rational(1) / t(leave, enter);
        for (std::size_t j = 0; j < width; ++j) t(leave, j) *= inv;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == leave || t(r, enter).is_zero()) continue;
            const Rational f = t(r, enter);
            for (std::size_t j = 0; j < width; ++j) t(r, j) -= f * t(leave, j);
        }
        basis[leave] = enter;
    }

    LpResult out;
    out.value = t(m, width - 1);
    out.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] < n) out.x[basis[r]] = t(r, width - 1);
    return out;
}

}  // namespace nolat
