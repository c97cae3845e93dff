#include "nolat/lattice.hpp"

#include "nolat/error.hpp"
#include "nolat/svp.hpp"

#include <cmath>
#include <string>

namespace nolat {

Lattice Lattice::from_gram(std::string name, RatMatrix gram, std::string provenance) {
    if (!gram.is_square()) throw Error(Errc::DimensionMismatch, "Gram matrix must be square");
    if (gram.rows() == 0) throw Error(Errc::InvalidArgument, "rank must be at least 1");
    if (!gram.is_symmetric()) throw Error(Errc::NotSymmetric, "Gram matrix of '" + name + "'");
    ldl_decompose(gram);
    return Lattice(std::move(name), std::move(gram), std::move(provenance));
}

Lattice Lattice::renamed(std::string name, std::string provenance) const {
    return Lattice(std::move(name), gram_, std::move(provenance));
}

Rational Lattice::inner(const std::vector<long long>& u, const std::vector<long long>& w) const {
    const std::size_t n = rank();
    if (u.size() != n || w.size() != n) throw Error(Errc::DimensionMismatch, "coefficient vector length");
    Rational s;
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        Rational row;
        for (std::size_t j = 0; j < n; ++j)
            if (w[j] != 0) row += gram_(i, j) * Rational(w[j]);
        s += Rational(u[i]) * row;
    }
    return s;
}

Rational Lattice::norm_sq(const std::vector<long long>& u) const { return inner(u, u); }

std::vector<std::vector<double>> float_gram(const FloatBasis& basis) {
    const std::size_t n = basis.columns.size();
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        if (basis.columns[i].size() != basis.ambient_dim)
            throw Error(Errc::DimensionMismatch, "basis column length differs from ambient dimension");
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < basis.ambient_dim; ++k) s += basis.columns[i][k] * basis.columns[j][k];
            g[i][j] = s;
        }
    }
    return g;
}

Lattice lattice_from_float_basis(const std::string& name, const FloatBasis& basis, long max_denominator) {
    const std::size_t n = basis.columns.size();
    if (n == 0) throw Error(Errc::InvalidArgument, "empty basis");
    if (n > basis.ambient_dim) throw Error(Errc::DimensionMismatch, "more basis vectors than ambient dimension");
    const auto fg = float_gram(basis);
    RatMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Rational q = best_approximation(fg[i][j], max_denominator);
            if (std::fabs(q.to_double() - fg[i][j]) > 1e-9)
                throw Error(Errc::RationalizationFailed,
                            "Gram entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") has no approximant with denominator <= " + std::to_string(max_denominator));
            gram(i, j) = q;
            gram(j, i) = q;
        }
    return Lattice::from_gram(name, std::move(gram), "float basis");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    const std::size_t n = a.rank(), m = b.rank();
    RatMatrix g(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = a.g(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.g(i, j);
    return Lattice::from_gram(a.name() + "+" + b.name(), std::move(g), "direct sum");
}

Lattice normalize_min_norm(const Lattice& lattice) {
    const Rational m = minimal_norm_sq(lattice);
    if (m == Rational(1)) return lattice;
    return Lattice::from_gram(lattice.name(), lattice.gram().scaled(Rational(1) / m), lattice.provenance());
}

Lattice principal_sublattice(const Lattice& lattice, const std::vector<std::size_t>& indices) {
    const std::size_t n = lattice.rank();
    if (indices.empty()) throw Error(Errc::InvalidArgument, "empty index set");
    std::vector<bool> seen(n, false);
    for (auto i : indices) {
        if (i >= n || seen[i]) throw Error(Errc::InvalidArgument, "bad sublattice indices");
        seen[i] = true;
    }
    RatMatrix g(indices.size(), indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b) g(a, b) = lattice.g(indices[a], indices[b]);
    return Lattice::from_gram(lattice.name(), std::move(g), "principal sublattice");
}

bool is_permutation_of_range(const std::vector<std::size_t>& perm, std::size_t n) {
    if (perm.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) return false;
        seen[p] = true;
    }
    return true;
}

Lattice reorder_basis(const Lattice& lattice, const std::vector<std::size_t>& perm) {
    if (!is_permutation_of_range(perm, lattice.rank()))
        throw Error(Errc::InvalidArgument, "invalid permutation");
    const std::size_t n = lattice.rank();
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = lattice.g(perm[i], perm[j]);
    return Lattice::from_gram(lattice.name(), std::move(g), lattice.provenance());
}

Lattice change_basis(const Lattice& lattice, const std::vector<std::vector<long long>>& rows) {
    const std::size_t k = rows.size();
    RatMatrix g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            g(i, j) = lattice.inner(rows[i], rows[j]);
            g(j, i) = g(i, j);
        }
    return Lattice::from_gram(lattice.name(), std::move(g), lattice.provenance());
}

}  // namespace nolat
