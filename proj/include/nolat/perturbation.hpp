#pragma once

#include "nolat/lattice.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace nolat {

enum class PerturbMode { Planar, Block, Mu, Nu };

std::string_view perturb_mode_name(PerturbMode mode);

/// One change of the angle between a pair of unit basis vectors.
struct PerturbationOutcome {
    PerturbMode mode = PerturbMode::Planar;
    Lattice before;
    Lattice after;
    /// Basis indices (0-based) of the pair whose angle changed.
    std::pair<std::size_t, std::size_t> pair{0, 1};
    /// |cos| of that pair before and after.
    Rational cos_before;
    Rational cos_after;
    /// delta(after)^2 / delta(before)^2 from the two exact densities.
    Rational density_ratio_sq;
    /// (1 - cos_before^2) / (1 - cos_after^2).
    Rational predicted_ratio_sq;
    std::size_t kissing_before = 0;
    std::size_t kissing_after = 0;
    /// Output is well-rounded and every ordering of its basis is nearly orthogonal.
    bool still_nearly_orthogonal = false;
    /// max |g'_ij - g_ij|, a proxy for closeness.
    double gram_distance = 0.0;
};

/// Rank 2, unit diagonal, |new_cos| <= 1/2. The off-diagonal keeps its sign.
PerturbationOutcome perturb_2d(const Lattice& lattice, const Rational& new_cos);

/// Unit diagonal with nonzero off-diagonals only at (2k, 2k+1); replaces
/// block k's off-diagonal (sign kept). Requires block < rank/2, |new_cos| <= 1/2.
PerturbationOutcome perturb_block(const Lattice& lattice, std::size_t block, const Rational& new_cos);

/// Floating-point perturbation of a lattice with a nearly orthogonal unit
/// basis. The pair attaining mu (or nu) is rotated inside its own plane to
/// |cos| = target; the plane and every later vector stay fixed, so the
/// angles against later spans are preserved. The result is rationalized
/// (denominators <= max_denominator) and then checked: |mu' - target| <= tol
/// (resp. nu'), density ratio within tol of the predicted value, and
/// membership of the output. Throws VerificationFailed otherwise.
PerturbationOutcome perturb_general(const Lattice& lattice, PerturbMode mode, const Rational& target,
                                    double tol = 1e-9, long max_denominator = 1000000);

}  // namespace nolat
