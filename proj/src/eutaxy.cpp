#include "nolat/eutaxy.hpp"

#include "nolat/error.hpp"
#include "nolat/simplex.hpp"

#include <algorithm>

namespace nolat {

std::string_view eutaxy_class_name(EutaxyClass c) {
    switch (c) {
        case EutaxyClass::NotWeaklyEutactic: return "NotWeaklyEutactic";
        case EutaxyClass::WeaklyEutactic: return "WeaklyEutactic";
        case EutaxyClass::Eutactic: return "Eutactic";
        case EutaxyClass::StronglyEutactic: return "StronglyEutactic";
    }
    return "Unknown";
}

namespace {

void require_well_rounded(const Lattice& lattice, const MinimalVectorSet& mv) {
    if (!is_well_rounded(mv, lattice.rank()))
        throw Error(Errc::NotWellRounded, "'" + lattice.name() + "' is not well-rounded");
}

// Rows: upper-triangle entries (i <= j); columns: minimal pairs.
RatMatrix projector_system(const MinimalVectorSet& mv, std::size_t n) {
    const std::size_t k = mv.pairs.size();
    RatMatrix a(n * (n + 1) / 2, k);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++row)
            for (std::size_t p = 0; p < k; ++p) a(row, p) = Rational(mv.pairs[p][i] * mv.pairs[p][j]);
    return a;
}

RatVector upper_triangle(const RatMatrix& m) {
    RatVector out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

}  // namespace

bool eutaxy_identity_holds(const Lattice& lattice, const MinimalVectorSet& mv, const RatVector& coefficients) {
    const std::size_t n = lattice.rank();
    if (coefficients.size() != mv.pairs.size()) return false;
    RatMatrix sum(n, n);
    for (std::size_t p = 0; p < mv.pairs.size(); ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                sum(i, j) += coefficients[p] * Rational(mv.pairs[p][i] * mv.pairs[p][j]);
    return sum == rat_inverse(lattice.gram());
}

EutaxyResult eutaxy_classify(const Lattice& lattice, const EnumOptions& options) {
    return eutaxy_classify(lattice, minimal_vectors(lattice, options));
}

EutaxyResult eutaxy_classify(const Lattice& lattice, const MinimalVectorSet& mv) {
    require_well_rounded(lattice, mv);
    const std::size_t n = lattice.rank();
    const std::size_t k = mv.pairs.size();
    const RatMatrix ginv = rat_inverse(lattice.gram());

    EutaxyResult result;
    const auto sol = solve_affine(projector_system(mv, n), upper_triangle(ginv));
    if (!sol) return result;
    result.solution_space_dim = sol->nullspace.size();

    // Strong eutaxy, independent of the LP: sum u u^T must be a positive multiple of G^{-1}.
    RatMatrix s(n, n);
    for (const auto& u : mv.pairs)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s(i, j) += Rational(u[i] * u[j]);
    const Rational lambda = s(0, 0) / ginv(0, 0);
    if (lambda.sign() > 0 && s == ginv.scaled(lambda)) {
        result.eutaxy_class = EutaxyClass::StronglyEutactic;
        result.coefficients = RatVector(k, Rational(1) / lambda);
        return result;
    }

    const RatVector& c0 = sol->particular;
    const Rational c0_min = *std::min_element(c0.begin(), c0.end());
    result.eutaxy_class = EutaxyClass::WeaklyEutactic;
    result.coefficients = c0;
    if (c0_min.sign() > 0) {
        result.eutaxy_class = EutaxyClass::Eutactic;
        return result;
    }
    const std::size_t d = sol->nullspace.size();
    if (d == 0) return result;

    // Maximize t subject to c0 + N z >= t. Shift s = t - t0 >= 0 with
    // t0 = min(c0) - 1 so the origin is feasible, split z = z+ - z-, and cap t <= 1.
    const Rational t0 = c0_min - Rational(1);
    const std::size_t vars = 1 + 2 * d;
    RatMatrix a(k + 1, vars);
    RatVector b(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        a(i, 0) = 1;
        for (std::size_t j = 0; j < d; ++j) {
            a(i, 1 + j) = -sol->nullspace[j][i];
            a(i, 1 + d + j) = sol->nullspace[j][i];
        }
        b[i] = c0[i] - t0;
    }
    a(k, 0) = 1;
    b[k] = Rational(1) - t0;
    RatVector objective(vars, Rational(0));
    objective[0] = 1;

    const LpResult lp = simplex_maximize(a, b, objective);
    if (lp.status != LpResult::Status::Optimal) return result;
    if ((lp.value + t0).sign() <= 0) return result;

    RatVector c = c0;
    for (std::size_t j = 0; j < d; ++j) {
        const Rational zj = lp.x[1 + j] - lp.x[1 + d + j];
        if (zj.is_zero()) continue;
        for (std::size_t i = 0; i < k; ++i) c[i] += zj * sol->nullspace[j][i];
    }
    result.eutaxy_class = EutaxyClass::Eutactic;
    result.coefficients = std::move(c);
    return result;
}

bool is_perfect(const Lattice& lattice, const EnumOptions& options) {
    return is_perfect(lattice, minimal_vectors(lattice, options));
}

bool is_perfect(const Lattice& lattice, const MinimalVectorSet& mv) {
    require_well_rounded(lattice, mv);
    const std::size_t n = lattice.rank();
    return rat_rank(projector_system(mv, n)) == n * (n + 1) / 2;
}

}  // namespace nolat
