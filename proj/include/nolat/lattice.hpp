#pragma once

#include "nolat/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nolat {

/// A rank-n lattice stored as its exact Gram matrix g_ij = (b_i, b_j).
///
/// The Gram matrix is the canonical representation: every lattice handled
/// here has a rational Gram even when a basis needs irrational coordinates.
/// Construction validates symmetry and positive-definiteness, so a Lattice
/// value is always a valid lattice.
class Lattice {
public:
    /// Throws NotSymmetric, NotPositiveDefinite or DimensionMismatch.
    static Lattice from_gram(std::string name, RatMatrix gram, std::string provenance = {});

    const std::string& name() const { return name_; }
    const std::string& provenance() const { return provenance_; }
    std::size_t rank() const { return gram_.rows(); }
    const RatMatrix& gram() const { return gram_; }
    const Rational& g(std::size_t i, std::size_t j) const { return gram_(i, j); }

    /// det of the Gram matrix, i.e. (det L)^2.
    Rational gram_det() const { return rat_det(gram_); }

    Lattice renamed(std::string name, std::string provenance) const;

    /// Integer coefficient vector u -> u^T G u.
    Rational norm_sq(const std::vector<long long>& u) const;
    Rational inner(const std::vector<long long>& u, const std::vector<long long>& w) const;

private:
    Lattice(std::string name, RatMatrix gram, std::string provenance)
        : name_(std::move(name)), gram_(std::move(gram)), provenance_(std::move(provenance)) {}

    std::string name_;
    RatMatrix gram_;
    std::string provenance_;
};

/// Floating basis in some ambient space; `columns[i]` is the i-th basis vector.
struct FloatBasis {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<double>> columns;
};

/// Rationalizes the floating Gram entrywise (continued fractions, denominator
/// <= max_denominator). Throws RationalizationFailed when an approximant is
/// further than 1e-9 from the float, NotPositiveDefinite after rounding.
Lattice lattice_from_float_basis(const std::string& name, const FloatBasis& basis,
                                 long max_denominator);

/// Floating Gram of a basis, used for ingestion and consistency checks.
std::vector<std::vector<double>> float_gram(const FloatBasis& basis);

Lattice direct_sum(const Lattice& a, const Lattice& b);

/// Scales the Gram by 1/|L|^2 so the minimal norm becomes 1.
Lattice normalize_min_norm(const Lattice& lattice);

/// Gram restricted to `indices` (0-based, distinct, order kept).
Lattice principal_sublattice(const Lattice& lattice, const std::vector<std::size_t>& indices);

/// New basis order: position i holds old basis vector perm[i] (0-based).
Lattice reorder_basis(const Lattice& lattice, const std::vector<std::size_t>& perm);

/// Lattice spanned by the integer combinations rows[i] of the basis:
/// Gram U G U^T. Throws NotPositiveDefinite when the rows are dependent.
Lattice change_basis(const Lattice& lattice, const std::vector<std::vector<long long>>& rows);

bool is_permutation_of_range(const std::vector<std::size_t>& perm, std::size_t n);

}  // namespace nolat
