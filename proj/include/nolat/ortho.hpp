#pragma once

#include "nolat/lattice.hpp"
#include "nolat/svp.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nolat {

/// cos^2 threshold for theta = pi/3.
inline Rational near_orthogonal_threshold() { return Rational(1, 4); }

/// Angles of an ordered basis: cos_sq[i] is cos^2 of the angle between
/// b_{ordering[i+1]} and the span of b_{ordering[0..i]}.
struct AngleProfile {
    std::vector<std::size_t> ordering;
    std::vector<Rational> cos_sq;
};

struct OrthoViolation {
    std::vector<std::size_t> ordering;
    /// 1-based level i: b_{i+1} against the span of the first i vectors.
    std::size_t level = 0;
    Rational cos_sq;
};

/// Verdict for one stored basis. Orderings are 0-based basis indices.
struct OrthoVerdict {
    bool weakly = false;    ///< some ordering is weakly theta-orthogonal
    bool strictly = false;  ///< every ordering is
    std::optional<std::vector<std::size_t>> witness;  ///< lexicographically smallest passing ordering
    std::optional<OrthoViolation> violation;           ///< lexicographically smallest failing ordering
};

/// cos^2 of the angle between b_v and span{b_s : s in span}.
Rational cos_sq_angle_to_span(const Lattice& lattice, std::size_t v, const std::vector<std::size_t>& span);

AngleProfile angle_profile(const Lattice& lattice, const std::vector<std::size_t>& ordering);

/// theta_i >= theta for all i, compared as cos^2(theta_i) <= threshold.
bool is_weakly_theta_orthogonal(const Lattice& lattice, const std::vector<std::size_t>& ordering,
                                const Rational& cos_sq_threshold = near_orthogonal_threshold());

struct OrthoOptions {
    std::size_t max_rank = 9;
    /// Reuse verified subtrees keyed by the set of already placed vectors.
    bool prune = true;
};

/// DFS over ordering prefixes; a failing prefix cuts all its extensions.
OrthoVerdict is_theta_orthogonal(const Lattice& lattice,
                                 const Rational& cos_sq_threshold = near_orthogonal_threshold(),
                                 const OrthoOptions& options = {});

/// Verdict plus an optional search over bases made of minimal vectors.
struct MembershipReport {
    bool well_rounded = false;
    std::size_t kissing_number = 0;
    OrthoVerdict stored;
    bool searched = false;
    bool search_complete = false;  ///< false when the subset guard stopped the search
    std::size_t subsets_examined = 0;
    std::size_t bases_examined = 0;
    std::optional<OrthoVerdict> best;
    std::optional<std::vector<IntVector>> best_basis;
    /// Has a weakly nearly orthogonal basis (nullopt: undetermined).
    std::optional<bool> in_w;
    /// Has a nearly orthogonal basis (nullopt: undetermined).
    std::optional<bool> in_w_star;
    /// A negative verdict came from |S| > 4n-2 (W_n) or |S| > 3n (W*_n).
    bool kissing_bound_applied = false;
};

struct MembershipOptions {
    bool search_minimal_bases = true;
    std::size_t max_subsets = 200000;
    /// Decide "no" from the kissing-number bounds instead of searching.
    bool use_kissing_bounds = true;
    Rational cos_sq_threshold = near_orthogonal_threshold();
    EnumOptions enumeration{};
};

/// Throws NotWellRounded when the minimal vectors do not span.
MembershipReport membership_report(const Lattice& lattice, const MembershipOptions& options = {});
MembershipReport membership_report(const Lattice& lattice, const MinimalVectorSet& mv,
                                   const MembershipOptions& options = {});

}  // namespace nolat
