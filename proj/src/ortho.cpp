#include "nolat/ortho.hpp"

#include "nolat/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace nolat {

Rational cos_sq_angle_to_span(const Lattice& lattice, std::size_t v, const std::vector<std::size_t>& span) {
    const std::size_t n = lattice.rank();
    if (span.empty()) throw Error(Errc::InvalidArgument, "span must be nonempty");
    if (v >= n) throw Error(Errc::InvalidArgument, "vector index out of range");
    for (auto s : span)
        if (s >= n || s == v) throw Error(Errc::InvalidArgument, "bad span index");

    const std::size_t k = span.size();
    RatMatrix gss(k, k);
    RatVector rhs(k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) gss(a, b) = lattice.g(span[a], span[b]);
        rhs[a] = lattice.g(span[a], v);
    }
    const auto x = rat_solve(gss, rhs);
    if (!x) throw Error(Errc::InvalidArgument, "span vectors are dependent");
    Rational proj_sq;
    for (std::size_t a = 0; a < k; ++a) proj_sq += rhs[a] * (*x)[a];
    return proj_sq / lattice.g(v, v);
}

AngleProfile angle_profile(const Lattice& lattice, const std::vector<std::size_t>& ordering) {
    if (!is_permutation_of_range(ordering, lattice.rank()))
        throw Error(Errc::InvalidArgument, "invalid ordering");
    AngleProfile p{ordering, {}};
    std::vector<std::size_t> prefix;
    for (std::size_t i = 0; i + 1 < ordering.size(); ++i) {
        prefix.push_back(ordering[i]);
        p.cos_sq.push_back(cos_sq_angle_to_span(lattice, ordering[i + 1], prefix));
    }
    return p;
}

bool is_weakly_theta_orthogonal(const Lattice& lattice, const std::vector<std::size_t>& ordering,
                                const Rational& cos_sq_threshold) {
    const auto p = angle_profile(lattice, ordering);
    return std::all_of(p.cos_sq.begin(), p.cos_sq.end(),
                       [&](const Rational& c) { return c <= cos_sq_threshold; });
}

namespace {

// cos^2 against a span depends only on the set of placed vectors, so values
// are cached by (mask, v).
class OrderingSearch {
public:
    OrderingSearch(const Lattice& lattice, Rational threshold, bool prune)
        : lattice_(lattice), threshold_(std::move(threshold)), prune_(prune), n_(lattice.rank()),
          full_((1u << n_) - 1), cache_((std::size_t{1} << n_) * n_), verified_(std::size_t{1} << n_, false),
          dead_(std::size_t{1} << n_, false) {}

    const Rational& cos_sq(unsigned mask, std::size_t v) {
        auto& slot = cache_[static_cast<std::size_t>(mask) * n_ + v];
        if (!slot) {
            std::vector<std::size_t> span;
            for (std::size_t i = 0; i < n_; ++i)
                if (mask & (1u << i)) span.push_back(i);
            slot = cos_sq_angle_to_span(lattice_, v, span);
        }
        return *slot;
    }

    bool passes(unsigned mask, std::size_t v) { return mask == 0 || cos_sq(mask, v) <= threshold_; }

    bool all_pass(std::vector<std::size_t>& prefix, unsigned mask) {
        if (mask == full_) return true;
        if (prune_ && verified_[mask]) return true;
        for (std::size_t v = 0; v < n_; ++v) {
            if (mask & (1u << v)) continue;
            if (!passes(mask, v)) {
                OrthoViolation bad;
                bad.ordering = prefix;
                bad.ordering.push_back(v);
                for (std::size_t r = 0; r < n_; ++r)
                    if (!(mask & (1u << r)) && r != v) bad.ordering.push_back(r);
                bad.level = static_cast<std::size_t>(std::popcount(mask));
                bad.cos_sq = cos_sq(mask, v);
                violation_ = std::move(bad);
                return false;
            }
            prefix.push_back(v);
            const bool ok = all_pass(prefix, mask | (1u << v));
            prefix.pop_back();
            if (!ok) return false;
        }
        verified_[mask] = true;
        return true;
    }

    bool some_pass(std::vector<std::size_t>& prefix, unsigned mask) {
        if (mask == full_) {
            witness_ = prefix;
            return true;
        }
        if (prune_ && dead_[mask]) return false;
        for (std::size_t v = 0; v < n_; ++v) {
            if ((mask & (1u << v)) || !passes(mask, v)) continue;
            prefix.push_back(v);
            const bool ok = some_pass(prefix, mask | (1u << v));
            prefix.pop_back();
            if (ok) return true;
        }
        dead_[mask] = true;
        return false;
    }

    std::optional<OrthoViolation> violation_;
    std::optional<std::vector<std::size_t>> witness_;

private:
    const Lattice& lattice_;
    Rational threshold_;
    bool prune_;
    std::size_t n_;
    unsigned full_;
    std::vector<std::optional<Rational>> cache_;
    std::vector<bool> verified_;
    std::vector<bool> dead_;
};

int verdict_rank(const OrthoVerdict& v) { return v.strictly ? 2 : (v.weakly ? 1 : 0); }

}  // namespace

OrthoVerdict is_theta_orthogonal(const Lattice& lattice, const Rational& cos_sq_threshold,
                                 const OrthoOptions& options) {
    const std::size_t n = lattice.rank();
    if (n > options.max_rank)
        throw Error(Errc::DimensionGuardExceeded,
                    "ordering search limited to rank " + std::to_string(options.max_rank));
    if (cos_sq_threshold.sign() < 0 || cos_sq_threshold > Rational(1))
        throw Error(Errc::InvalidArgument, "cos^2 threshold must lie in [0, 1]");

    OrderingSearch search(lattice, cos_sq_threshold, options.prune);
    std::vector<std::size_t> prefix;
    OrthoVerdict verdict;
    verdict.strictly = search.all_pass(prefix, 0);
    prefix.clear();
    verdict.weakly = search.some_pass(prefix, 0);
    verdict.witness = search.witness_;
    verdict.violation = search.violation_;
    return verdict;
}

MembershipReport membership_report(const Lattice& lattice, const MembershipOptions& options) {
    return membership_report(lattice, minimal_vectors(lattice, options.enumeration), options);
}

MembershipReport membership_report(const Lattice& lattice, const MinimalVectorSet& mv,
                                   const MembershipOptions& options) {
    const std::size_t n = lattice.rank();
    MembershipReport report;
    report.kissing_number = mv.kissing_number();
    report.well_rounded = is_well_rounded(mv, n);
    if (!report.well_rounded) throw Error(Errc::NotWellRounded, "'" + lattice.name() + "' is not well-rounded");

    report.stored = is_theta_orthogonal(lattice, options.cos_sq_threshold);

    // |S| <= 4n - 2 on W_n and |S| <= 3n on W*_n; past these the search is moot.
    const std::size_t kn = report.kissing_number;
    const bool over_w = options.use_kissing_bounds && kn > 4 * n - 2;
    const bool over_star = options.use_kissing_bounds && kn > 3 * n;

    if (options.search_minimal_bases && !report.stored.strictly && !over_w &&
        !(over_star && report.stored.weakly)) {
        report.searched = true;
        report.search_complete = true;
        const std::size_t k = mv.pairs.size();
        std::vector<std::size_t> pick(n);
        for (std::size_t i = 0; i < n; ++i) pick[i] = i;
        while (true) {
            if (report.subsets_examined >= options.max_subsets) {
                report.search_complete = false;
                break;
            }
            ++report.subsets_examined;
            std::vector<IntVector> rows;
            for (auto i : pick) rows.push_back(mv.pairs[i]);
            const Integer det = int_det(rows);
            if (det == 1 || det == -1) {
                ++report.bases_examined;
                const auto verdict = is_theta_orthogonal(change_basis(lattice, rows), options.cos_sq_threshold);
                if (!report.best || verdict_rank(verdict) > verdict_rank(*report.best)) {
                    report.best = verdict;
                    report.best_basis = rows;
                }
                if (verdict.strictly || (over_star && verdict.weakly)) break;
            }
            // next n-combination of k in lexicographic order
            std::size_t i = n;
            while (i > 0 && pick[i - 1] == k - n + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    const bool found_weak = report.stored.weakly || (report.best && report.best->weakly);
    const bool found_strict = report.stored.strictly || (report.best && report.best->strictly);
    const bool exhausted = report.searched && report.search_complete;
    auto verdict = [&](bool found, bool over) -> std::optional<bool> {
        if (found) return true;
        if (over || exhausted) return false;
        return std::nullopt;
    };
    report.in_w = verdict(found_weak, over_w);
    report.in_w_star = verdict(found_strict, over_star);
    report.kissing_bound_applied = over_w || over_star;
    return report;
}

}  // namespace nolat
