#include "nolat/perturbation.hpp"

#include "nolat/error.hpp"
#include "nolat/invariants.hpp"
#include "nolat/ortho.hpp"
#include "nolat/svp.hpp"

#include <cmath>
#include <sstream>

namespace nolat {

std::string_view perturb_mode_name(PerturbMode mode) {
    switch (mode) {
        case PerturbMode::Planar: return "2d";
        case PerturbMode::Block: return "block";
        case PerturbMode::Mu: return "mu";
        case PerturbMode::Nu: return "nu";
    }
    return "unknown";
}

namespace {

void require_unit_diagonal(const Lattice& lattice) {
    for (std::size_t i = 0; i < lattice.rank(); ++i)
        if (lattice.g(i, i) != Rational(1))
            throw Error(Errc::InvalidArgument, "'" + lattice.name() + "' does not have a unit Gram diagonal");
}

void require_cos_range(const Rational& c) {
    if (abs(c) > Rational(1, 2)) throw Error(Errc::InvalidArgument, "|cos| must be at most 1/2, got " + c.str());
}

Rational signed_like(const Rational& old_value, const Rational& magnitude) {
    return old_value.sign() < 0 ? -abs(magnitude) : abs(magnitude);
}

double gram_distance(const Lattice& a, const Lattice& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) d = std::max(d, abs(a.g(i, j) - b.g(i, j)).to_double());
    return d;
}

PerturbationOutcome finish(PerturbMode mode, const Lattice& before, const Lattice& after, std::size_t i,
                           std::size_t j) {
    const auto mv_before = minimal_vectors(before);
    const auto mv_after = minimal_vectors(after);
    const Rational cb = abs(before.g(i, j));
    const Rational ca = abs(after.g(i, j));
    const Rational one(1);

    bool still = is_well_rounded(mv_after, after.rank());
    if (still && after.rank() > 1) still = is_theta_orthogonal(after).strictly;

    return PerturbationOutcome{
        .mode = mode,
        .before = before,
        .after = after,
        .pair = {i, j},
        .cos_before = cb,
        .cos_after = ca,
        .density_ratio_sq = packing_density(after, mv_after.norm_sq).delta_sq_over_omega_sq /
                            packing_density(before, mv_before.norm_sq).delta_sq_over_omega_sq,
        .predicted_ratio_sq = (one - cb * cb) / (one - ca * ca),
        .kissing_before = mv_before.kissing_number(),
        .kissing_after = mv_after.kissing_number(),
        .still_nearly_orthogonal = still,
        .gram_distance = gram_distance(before, after),
    };
}

std::string after_name(const Lattice& lattice) { return lattice.name() + "'"; }

}  // namespace

PerturbationOutcome perturb_2d(const Lattice& lattice, const Rational& new_cos) {
    if (lattice.rank() != 2) throw Error(Errc::InvalidArgument, "perturb_2d needs a rank-2 lattice");
    require_unit_diagonal(lattice);
    require_cos_range(new_cos);
    RatMatrix g = lattice.gram();
    g(0, 1) = g(1, 0) = signed_like(g(0, 1), new_cos);
    const auto after = Lattice::from_gram(after_name(lattice), g,
                                          "perturb_2d(" + lattice.name() + ", cos=" + new_cos.str() + ")");
    return finish(PerturbMode::Planar, lattice, after, 0, 1);
}

PerturbationOutcome perturb_block(const Lattice& lattice, std::size_t block, const Rational& new_cos) {
    const std::size_t n = lattice.rank();
    require_unit_diagonal(lattice);
    require_cos_range(new_cos);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!lattice.g(i, j).is_zero() && !(i % 2 == 0 && j == i + 1))
                throw Error(Errc::InvalidArgument, "'" + lattice.name() + "' is not block structured: g(" +
                                                       std::to_string(i) + "," + std::to_string(j) + ") != 0");
    if (block >= n / 2)
        throw Error(Errc::InvalidArgument, "block " + std::to_string(block) + " does not exist in rank " + std::to_string(n));
    const std::size_t i = 2 * block, j = i + 1;
    RatMatrix g = lattice.gram();
    g(i, j) = g(j, i) = signed_like(g(i, j), new_cos);
    const auto after = Lattice::from_gram(after_name(lattice), g,
                                          "perturb_block(" + lattice.name() + ", block=" + std::to_string(block) +
                                              ", cos=" + new_cos.str() + ")");
    return finish(PerturbMode::Block, lattice, after, i, j);
}

PerturbationOutcome perturb_general(const Lattice& lattice, PerturbMode mode, const Rational& target, double tol,
                                    long max_denominator) {
    if (mode != PerturbMode::Mu && mode != PerturbMode::Nu)
        throw Error(Errc::InvalidArgument, "perturb_general takes mode mu or nu");
    const std::size_t n = lattice.rank();
    if (n < 2) throw Error(Errc::InvalidArgument, "perturb_general needs rank >= 2");
    require_unit_diagonal(lattice);

    const auto mv = minimal_vectors(lattice);
    if (!is_well_rounded(mv, n) || !is_theta_orthogonal(lattice).strictly)
        throw Error(Errc::VerificationFailed,
                    "'" + lattice.name() + "' is not certified: its stored basis is not nearly orthogonal");

    // Pair attaining mu (min |g_ij|) or nu (max |g_ij|); first in (i, j) order on ties.
    std::size_t pi = 0, pj = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational c = abs(lattice.g(i, j)), best = abs(lattice.g(pi, pj));
            if (mode == PerturbMode::Mu ? c < best : c > best) {
                pi = i;
                pj = j;
            }
        }
    const Rational current = abs(lattice.g(pi, pj));
    if (mode == PerturbMode::Mu && (target.sign() <= 0 || target > Rational(1, 2)))
        throw Error(Errc::InvalidArgument, "mu target must lie in (0, 1/2]");
    if (mode == PerturbMode::Nu && (target.sign() < 0 || target > current))
        throw Error(Errc::InvalidArgument, "nu target must lie in [0, " + current.str() + "]");

    // Floating Cholesky: b_k is row k of the lower factor.
    std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double s = lattice.g(i, j).to_double();
            for (std::size_t k = 0; k < j; ++k) s -= b[i][k] * b[j][k];
            b[i][j] = (i == j) ? std::sqrt(s) : s / b[j][j];
        }

    // Rotate b_pj inside span{b_pi, b_pj}; unit vectors throughout.
    const double c = lattice.g(pi, pj).to_double();
    const double t = target.to_double();
    const double sign = c < 0 ? -1.0 : 1.0;
    const double sc = std::sqrt(1.0 - c * c), st = std::sqrt(1.0 - t * t);
    std::vector<double> rotated(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double e = (b[pj][k] - c * b[pi][k]) / sc;
        rotated[k] = sign * t * b[pi][k] + st * e;
    }
    b[pj] = rotated;

    const std::string label = std::string(perturb_mode_name(mode)) + " target " + target.str();
    auto fail = [&](const std::string& why) {
        throw Error(Errc::VerificationFailed, "perturb_general(" + lattice.name() + ", " + label + "): " + why);
    };

    std::optional<Lattice> after;
    try {
        after = lattice_from_float_basis(after_name(lattice), FloatBasis{n, b}, max_denominator);
    } catch (const Error& e) {
        fail(std::string("rationalization failed: ") + e.what());
    }
    *after = after->renamed(after->name(), "perturb_general(" + lattice.name() + ", " + label + ")");

    auto outcome = finish(mode, lattice, *after, pi, pj);
    outcome.mode = mode;

    std::optional<Rational> extreme;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational v = abs(after->g(i, j));
            if (!extreme || (mode == PerturbMode::Mu ? v < *extreme : v > *extreme)) extreme = v;
        }
    std::ostringstream diag;
    diag.precision(17);
    if (std::abs(extreme->to_double() - t) > tol) {
        diag << perturb_mode_name(mode) << "' = " << extreme->to_double() << " misses target " << t;
        fail(diag.str());
    }
    const double predicted = (1.0 - c * c) / (1.0 - t * t);
    if (std::abs(outcome.density_ratio_sq.to_double() - predicted) > tol * std::max(1.0, predicted)) {
        diag << "density ratio^2 " << outcome.density_ratio_sq.to_double() << " vs predicted " << predicted;
        fail(diag.str());
    }
    if (!outcome.still_nearly_orthogonal) fail("output basis is no longer nearly orthogonal or not well-rounded");
    return outcome;
}

}  // namespace nolat
