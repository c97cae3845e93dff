#pragma once

#include "nolat/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace nolat {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix transpose() const;
    RatMatrix scaled(const Rational& factor) const;
    bool is_symmetric() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct LDLFactorization {
    RatMatrix unit_lower;
    RatVector diag;

    /// L * diag(d) * L^T.
    RatMatrix reconstruct() const;
};

/// Determinant by fraction-free (Bareiss) elimination after clearing row denominators.
Rational rat_det(const RatMatrix& a);

/// Rank over Q, fraction-free.
std::size_t rat_rank(const RatMatrix& a);

/// Unique solution of A x = b, or nullopt when A is singular.
/// Throws DimensionMismatch on shape errors.
std::optional<RatVector> rat_solve(const RatMatrix& a, const RatVector& b);

/// General solution x = particular + span(nullspace) of a possibly
/// rectangular system A x = b.
struct AffineSolution {
    RatVector particular;
    std::vector<RatVector> nullspace;
};
std::optional<AffineSolution> solve_affine(const RatMatrix& a, const RatVector& b);

/// Inverse of a nonsingular square matrix; throws InvalidArgument when singular.
RatMatrix rat_inverse(const RatMatrix& a);

/// Exact LDL^T of a symmetric matrix. Throws NotPositiveDefinite if a pivot is <= 0.
LDLFactorization ldl_decompose(const RatMatrix& g);

/// Determinant of a small integer matrix (Bareiss on mpz).
Integer int_det(const std::vector<std::vector<long long>>& m);

}  // namespace nolat
