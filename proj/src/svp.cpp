#include "nolat/svp.hpp"

#include "nolat/error.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

namespace nolat {

IntVector canonical_sign(IntVector u) {
    for (auto x : u) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : u) y = -y;
        break;
    }
    return u;
}

namespace {

bool is_canonical(const IntVector& u) {
    for (auto x : u)
        if (x != 0) return x > 0;
    return false;
}

void check_dimension(const Lattice& lattice, const EnumOptions& options) {
    if (lattice.rank() > options.max_dim)
        throw Error(Errc::DimensionGuardExceeded,
                    "rank " + std::to_string(lattice.rank()) + " exceeds guard " + std::to_string(options.max_dim));
}

// Depth-first enumeration of x with Q(x) = sum_k d_k (x_k + c_k)^2 <= bound,
// where c_k = sum_{j>k} l_jk x_j. Keeps every canonical x attaining the
// smallest value seen, shrinking the bound as shorter vectors appear.
class Enumerator {
public:
    Enumerator(const LDLFactorization& ldl, Rational bound)
        : l_(ldl.unit_lower), d_(ldl.diag), n_(ldl.diag.size()), bound_(std::move(bound)), x_(n_, 0) {}

    // Integer range of the top coordinate for the initial bound.
    std::vector<long long> top_candidates() const {
        std::vector<long long> out;
        const std::size_t k = n_ - 1;
        for_each_candidate(k, Rational(0), Rational(0), [&](long long v, const Rational&) { out.push_back(v); });
        return out;
    }

    void run_with_top(long long top) {
        const std::size_t k = n_ - 1;
        const Rational q = d_[k] * Rational(top) * Rational(top);
        if (q > bound_) return;
        x_[k] = top;
        if (n_ == 1) {
            leaf(q);
        } else {
            descend(k - 1, q);
        }
        x_[k] = 0;
    }

    const Rational& bound() const { return bound_; }
    bool found() const { return found_; }
    std::vector<IntVector>& hits() { return hits_; }

private:
    template <typename F>
    void for_each_candidate(std::size_t k, const Rational& center, const Rational& partial, F&& visit) const {
        const Rational remaining = bound_ - partial;
        if (remaining.sign() < 0) return;
        const Rational radicand = remaining / d_[k];
        const Integer reach = int_sqrt_floor(radicand) + 1;
        const Rational neg_center = -center;
        const Integer lo = floor(neg_center) - reach;
        const Integer hi = ceil(neg_center) + reach;
        for (Integer v = lo; v <= hi; ++v) {
            const Rational y = Rational(v) + center;
            const Rational q = d_[k] * y * y;
            if (q > remaining) continue;
            visit(v.get_si(), q);
        }
    }

    Rational center(std::size_t k) const {
        Rational c;
        for (std::size_t j = k + 1; j < n_; ++j)
            if (x_[j] != 0 && !l_(j, k).is_zero()) c += l_(j, k) * Rational(x_[j]);
        return c;
    }

    void descend(std::size_t k, const Rational& partial) {
        const Rational c = center(k);
        const Rational remaining = bound_ - partial;
        if (remaining.sign() < 0) return;
        const Rational radicand = remaining / d_[k];
        const Integer reach = int_sqrt_floor(radicand) + 1;
        const Rational neg_center = -c;
        const Integer lo = floor(neg_center) - reach;
        const Integer hi = ceil(neg_center) + reach;
        for (Integer v = lo; v <= hi; ++v) {
            const Rational y = Rational(v) + c;
            const Rational q = partial + d_[k] * y * y;
            if (q > bound_) continue;  // bound_ may shrink during the loop
            x_[k] = v.get_si();
            if (k == 0) {
                leaf(q);
            } else {
                descend(k - 1, q);
            }
        }
        x_[k] = 0;
    }

    void leaf(const Rational& q) {
        if (q.is_zero()) return;  // zero vector
        if (q < bound_ || !found_) {
            if (q < bound_) hits_.clear();
            bound_ = q;
            found_ = true;
        }
        if (q == bound_ && is_canonical(x_)) hits_.push_back(x_);
    }

    const RatMatrix& l_;
    const RatVector& d_;
    std::size_t n_;
    Rational bound_;
    bool found_ = false;
    IntVector x_;
    std::vector<IntVector> hits_;
};

Rational initial_bound(const Lattice& lattice) {
    Rational b = lattice.g(0, 0);
    for (std::size_t i = 1; i < lattice.rank(); ++i) b = std::min(b, lattice.g(i, i));
    return b;
}

MinimalVectorSet enumerate(const Lattice& lattice, const EnumOptions& options) {
    check_dimension(lattice, options);
    const auto ldl = ldl_decompose(lattice.gram());
    const Rational start = initial_bound(lattice);

    Enumerator probe(ldl, start);
    const auto tops = probe.top_candidates();
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tops.size())));

    auto work = [&](unsigned worker) {
        Enumerator e(ldl, start);
        for (std::size_t i = worker; i < tops.size(); i += jobs) e.run_with_top(tops[i]);
        return std::make_pair(e.bound(), std::move(e.hits()));
    };

    std::vector<std::pair<Rational, std::vector<IntVector>>> parts;
    if (jobs == 1) {
        parts.push_back(work(0));
    } else {
        std::vector<std::future<std::pair<Rational, std::vector<IntVector>>>> futures;
        for (unsigned w = 0; w < jobs; ++w) futures.push_back(std::async(std::launch::async, work, w));
        for (auto& f : futures) parts.push_back(f.get());
    }

    // The diagonal bound is always attained by a basis vector, so some worker finds it.
    MinimalVectorSet out;
    out.norm_sq = parts.front().first;
    for (const auto& p : parts) out.norm_sq = std::min(out.norm_sq, p.first);
    for (auto& p : parts)
        if (p.first == out.norm_sq)
            for (auto& u : p.second) out.pairs.push_back(std::move(u));
    std::sort(out.pairs.begin(), out.pairs.end());
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());

    const std::size_t n = lattice.rank();
    if (out.pairs.size() > options.pair_factor * n * n)
        throw Error(Errc::PairCountGuard, std::to_string(out.pairs.size()) + " minimal pairs exceed guard " +
                                              std::to_string(options.pair_factor * n * n));
    return out;
}

}  // namespace

Rational minimal_norm_sq(const Lattice& lattice, const EnumOptions& options) {
    EnumOptions relaxed = options;
    relaxed.pair_factor = static_cast<std::size_t>(-1) / (lattice.rank() * lattice.rank() + 1);
    return enumerate(lattice, relaxed).norm_sq;
}

MinimalVectorSet minimal_vectors(const Lattice& lattice, const EnumOptions& options) {
    return enumerate(lattice, options);
}

MinimalVectorSet brute_force_min_vectors(const Lattice& lattice, int box) {
    const std::size_t n = lattice.rank();
    if (box < 1) throw Error(Errc::InvalidArgument, "box must be >= 1");
    if (std::pow(static_cast<double>(box), static_cast<double>(n)) > 1e8)
        throw Error(Errc::DimensionGuardExceeded, "brute-force box too large");

    // Q(u) on an integer multiple of G keeps the scan in integer arithmetic.
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Integer d = lattice.g(i, j).den();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
        }
    std::vector<std::vector<Integer>> gi(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gi[i][j] = lattice.g(i, j).num() * (scale / lattice.g(i, j).den());

    IntVector u(n, -box);
    bool have = false;
    Integer best;
    std::vector<IntVector> hits;
    while (true) {
        bool nonzero = false;
        for (auto x : u) nonzero = nonzero || x != 0;
        if (nonzero && is_canonical(u)) {
            Integer q = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (u[i] == 0) continue;
                Integer row = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (u[j] != 0) row += gi[i][j] * static_cast<long>(u[j]);
                q += row * static_cast<long>(u[i]);
            }
            if (!have || q < best) {
                have = true;
                best = q;
                hits.clear();
            }
            if (q == best) hits.push_back(u);
        }
        std::size_t k = 0;
        while (k < n && u[k] == box) u[k++] = -box;
        if (k == n) break;
        ++u[k];
    }
    std::sort(hits.begin(), hits.end());
    return MinimalVectorSet{Rational(best, scale), std::move(hits)};
}

bool is_well_rounded(const MinimalVectorSet& mv, std::size_t rank) {
    if (mv.pairs.size() < rank) return false;
    RatMatrix m(mv.pairs.size(), rank);
    for (std::size_t r = 0; r < mv.pairs.size(); ++r)
        for (std::size_t c = 0; c < rank; ++c) m(r, c) = Rational(mv.pairs[r][c]);
    return rat_rank(m) == rank;
}

bool is_well_rounded(const Lattice& lattice, const EnumOptions& options) {
    return is_well_rounded(minimal_vectors(lattice, options), lattice.rank());
}

}  // namespace nolat
