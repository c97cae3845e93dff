#pragma once

#include "nolat/lattice.hpp"
#include "nolat/svp.hpp"

#include <optional>
#include <string>
#include <utility>

namespace nolat {

/// Largest |cos| between two non-opposite minimal vectors.
struct CoherenceValue {
    Rational value;
    /// Lexicographically smallest pair of minimal-pair representatives attaining it.
    std::pair<IntVector, IntVector> attaining_pair;
};

/// |cos| between two basis vectors, kept as its exact square; `exact` is
/// set when the square root is rational.
struct BasisCosine {
    Rational cos_sq;
    std::optional<Rational> exact;

    /// "p/q" when exact, otherwise "sqrt(p/q)".
    std::string str() const;
};

struct MuNu {
    BasisCosine mu;
    BasisCosine nu;
};

/// delta(L) and the exact rational delta^2 / omega_n^2 = |L|^{2n} / (4^n det G).
struct DensityValue {
    double delta = 0.0;
    Rational delta_sq_over_omega_sq;
};

/// Throws FewerThanTwoPairs.
CoherenceValue coherence(const Lattice& lattice, const EnumOptions& options = {});
CoherenceValue coherence(const Lattice& lattice, const MinimalVectorSet& mv);

/// Max over representatives x of the mean |cos(x, y)| over the other representatives.
Rational average_coherence(const Lattice& lattice, const EnumOptions& options = {});
Rational average_coherence(const Lattice& lattice, const MinimalVectorSet& mv);

/// min / max of |cos(b_i, b_j)| over basis pairs i < j. Requires rank >= 2.
MuNu mu_nu(const Lattice& lattice);

DensityValue packing_density(const Lattice& lattice, const EnumOptions& options = {});
DensityValue packing_density(const Lattice& lattice, const Rational& min_norm_sq);

/// Volume of the unit ball in R^n.
double unit_ball_volume(std::size_t n);

/// (sqrt((n-2)^2 + 16(n-1)) - (n-2)) / (8(n-1)), for reporting.
double cn_value(int n);

/// Exact c <= c_n, i.e. 4(n-1)c^2 + (n-2)c - 1 <= 0 for c >= 0.
bool cn_test(const Rational& c, int n);

}  // namespace nolat
