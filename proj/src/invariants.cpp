#include "nolat/invariants.hpp"

#include "nolat/error.hpp"

#include <cmath>
#include <numbers>

namespace nolat {

std::string BasisCosine::str() const {
    if (exact) return exact->str();
    return "sqrt(" + cos_sq.str() + ")";
}

CoherenceValue coherence(const Lattice& lattice, const EnumOptions& options) {
    return coherence(lattice, minimal_vectors(lattice, options));
}

// All minimal vectors share the norm |L|, so |cos(u, w)| = |u^T G w| / |L|^2
// is rational and no square roots are needed.
CoherenceValue coherence(const Lattice& lattice, const MinimalVectorSet& mv) {
    const auto& p = mv.pairs;
    if (p.size() < 2) throw Error(Errc::FewerThanTwoPairs, "coherence needs two minimal pairs");
    CoherenceValue best{Rational(-1), {}};
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const Rational c = abs(lattice.inner(p[i], p[j])) / mv.norm_sq;
            if (c > best.value) best = {c, {p[i], p[j]}};
        }
    return best;
}

Rational average_coherence(const Lattice& lattice, const EnumOptions& options) {
    return average_coherence(lattice, minimal_vectors(lattice, options));
}

Rational average_coherence(const Lattice& lattice, const MinimalVectorSet& mv) {
    const auto& p = mv.pairs;
    if (p.size() < 2) throw Error(Errc::FewerThanTwoPairs, "average coherence needs two minimal pairs");
    std::vector<Rational> row_sum(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const Rational c = abs(lattice.inner(p[i], p[j])) / mv.norm_sq;
            row_sum[i] += c;
            row_sum[j] += c;
        }
    Rational best = row_sum[0];
    for (const auto& s : row_sum) best = std::max(best, s);
    return best / Rational(static_cast<long>(p.size()) - 1);
}

MuNu mu_nu(const Lattice& lattice) {
    const std::size_t n = lattice.rank();
    if (n < 2) throw Error(Errc::InvalidArgument, "mu/nu need rank >= 2");
    std::optional<Rational> lo, hi;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational c = lattice.g(i, j) * lattice.g(i, j) / (lattice.g(i, i) * lattice.g(j, j));
            if (!lo || c < *lo) lo = c;
            if (!hi || c > *hi) hi = c;
        }
    auto wrap = [](const Rational& sq) {
        BasisCosine b{sq, std::nullopt};
        Rational root;
        if (rational_sqrt(sq, root)) b.exact = root;
        return b;
    };
    return {wrap(*lo), wrap(*hi)};
}

double unit_ball_volume(std::size_t n) {
    // omega_0 = 1, omega_1 = 2, omega_n = omega_{n-2} * 2 pi / n
    double even = 1.0, odd = 2.0;
    if (n == 0) return even;
    if (n == 1) return odd;
    double result = 0.0;
    for (std::size_t k = 2; k <= n; ++k) {
        double& slot = (k % 2 == 0) ? even : odd;
        slot *= 2.0 * std::numbers::pi / static_cast<double>(k);
        result = slot;
    }
    return result;
}

DensityValue packing_density(const Lattice& lattice, const EnumOptions& options) {
    return packing_density(lattice, minimal_norm_sq(lattice, options));
}

DensityValue packing_density(const Lattice& lattice, const Rational& min_norm_sq) {
    const auto n = static_cast<unsigned>(lattice.rank());
    DensityValue out;
    out.delta_sq_over_omega_sq = pow(min_norm_sq, n) / (pow(Rational(4), n) * lattice.gram_det());
    out.delta = unit_ball_volume(n) * std::sqrt(out.delta_sq_over_omega_sq.to_double());
    return out;
}

double cn_value(int n) {
    if (n < 2) throw Error(Errc::InvalidArgument, "c_n needs n >= 2");
    // same value as (sqrt(a^2 + 16(n-1)) - a) / (8(n-1)) without the cancellation
    const double a = n - 2.0;
    return 2.0 / (std::sqrt(a * a + 16.0 * (n - 1.0)) + a);
}

bool cn_test(const Rational& c, int n) {
    if (n < 2) throw Error(Errc::InvalidArgument, "c_n needs n >= 2");
    if (c.sign() < 0) throw Error(Errc::NegativeInput, "c_n test needs c >= 0");
    const Rational value = Rational(4 * (n - 1)) * c * c + Rational(n - 2) * c - Rational(1);
    return value.sign() <= 0;
}

}  // namespace nolat
