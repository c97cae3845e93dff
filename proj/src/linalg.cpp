#include "nolat/linalg.hpp"

#include "nolat/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace nolat {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RatMatrix RatMatrix::scaled(const Rational& factor) const {
    RatMatrix out = *this;
    for (auto& x : out.data_) x *= factor;
    return out;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matrix product shapes");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RatMatrix LDLFactorization::reconstruct() const {
    const std::size_t n = diag.size();
    RatMatrix ld(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ld(i, j) = unit_lower(i, j) * diag[j];
    return ld * unit_lower.transpose();
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Multiplies every row by the lcm of its denominators; returns the product of
// the multipliers so that det(A) = det(rows) / product.
IntRows clear_denominators(const RatMatrix& a, Integer* multiplier_product) {
    IntRows rows(a.rows(), std::vector<Integer>(a.cols()));
    Integer product = 1;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const Integer d = a(r, c).den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t c = 0; c < a.cols(); ++c)
            rows[r][c] = a(r, c).num() * (l / a(r, c).den());
        product *= l;
    }
    if (multiplier_product) *multiplier_product = product;
    return rows;
}

// Fraction-free row echelon in place. Returns the rank and the sign of the
// row permutation; for square input of full rank the last pivot is det.
std::size_t bareiss(IntRows& m, int* swap_sign) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    Integer prev = 1;
    int sign = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap(m[pivot], m[rank]);
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[r][j] = m[r][j] * m[rank][c] - m[r][c] * m[rank][j];
                mpz_divexact(m[r][j].get_mpz_t(), m[r][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    if (swap_sign) *swap_sign = sign;
    return rank;
}

}  // namespace

Rational rat_det(const RatMatrix& a) {
    if (!a.is_square()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Integer multipliers;
    IntRows m = clear_denominators(a, &multipliers);
    int sign = 1;
    if (bareiss(m, &sign) < n) return 0;
    return Rational(m[n - 1][n - 1] * sign, multipliers);
}

std::size_t rat_rank(const RatMatrix& a) {
    IntRows m = clear_denominators(a, nullptr);
    return bareiss(m, nullptr);
}

Integer int_det(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    IntRows rows(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r].size() != n) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
        for (std::size_t c = 0; c < n; ++c) rows[r][c] = static_cast<long>(m[r][c]);
    }
    int sign = 1;
    if (bareiss(rows, &sign) < n) return 0;
    return rows[n - 1][n - 1] * sign;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t limit_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < limit_cols && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rational inv = Rational(1) / m(row, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c).is_zero()) continue;
            const Rational f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

RatMatrix augment(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.rows()) throw Error(Errc::DimensionMismatch, "right-hand side length");
    RatMatrix m(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        m(r, a.cols()) = b[r];
    }
    return m;
}

}  // namespace

std::optional<AffineSolution> solve_affine(const RatMatrix& a, const RatVector& b) {
    RatMatrix m = augment(a, b);
    const std::size_t n = a.cols();
    const auto pivots = rref(m, n);
    for (std::size_t r = pivots.size(); r < m.rows(); ++r)
        if (!m(r, n).is_zero()) return std::nullopt;

    AffineSolution sol;
    sol.particular.assign(n, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = m(i, n);

    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::optional<RatVector> rat_solve(const RatMatrix& a, const RatVector& b) {
    if (!a.is_square()) throw Error(Errc::DimensionMismatch, "rat_solve needs a square matrix");
    auto sol = solve_affine(a, b);
    if (!sol || !sol->nullspace.empty()) return std::nullopt;
    return std::move(sol->particular);
}

RatMatrix rat_inverse(const RatMatrix& a) {
    if (!a.is_square()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix m(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
        m(r, n + r) = 1;
    }
    if (rref(m, n).size() < n) throw Error(Errc::InvalidArgument, "matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = m(r, n + c);
    return inv;
}

LDLFactorization ldl_decompose(const RatMatrix& g) {
    if (!g.is_square()) throw Error(Errc::DimensionMismatch, "LDL of non-square matrix");
    if (!g.is_symmetric()) throw Error(Errc::NotSymmetric, "LDL input is not symmetric");
    const std::size_t n = g.rows();
    LDLFactorization f{RatMatrix::identity(n), RatVector(n)};
    for (std::size_t j = 0; j < n; ++j) {
        Rational d = g(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= f.unit_lower(j, k) * f.unit_lower(j, k) * f.diag[k];
        if (d.sign() <= 0)
            throw Error(Errc::NotPositiveDefinite, "pivot " + std::to_string(j + 1) + " is " + d.str());
        f.diag[j] = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= f.unit_lower(i, k) * f.unit_lower(j, k) * f.diag[k];
            f.unit_lower(i, j) = s / d;
        }
    }
    return f;
}

}  // namespace nolat
