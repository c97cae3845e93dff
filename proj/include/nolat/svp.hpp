#pragma once

#include "nolat/lattice.hpp"

#include <cstddef>
#include <vector>

namespace nolat {

using IntVector = std::vector<long long>;

/// Minimal vectors, one representative per +/- pair.
///
/// Each pair is an integer coefficient vector u with u^T G u == norm_sq, in
/// canonical sign (first nonzero coordinate positive); pairs are sorted
/// lexicographically, so equal lattices give identical sets.
struct MinimalVectorSet {
    Rational norm_sq;
    std::vector<IntVector> pairs;

    /// |S(L)|, counting both signs.
    std::size_t kissing_number() const { return 2 * pairs.size(); }

    friend bool operator==(const MinimalVectorSet&, const MinimalVectorSet&) = default;
};

struct EnumOptions {
    std::size_t max_dim = 12;
    /// Abort when the number of pairs exceeds pair_factor * n^2.
    std::size_t pair_factor = 10;
    /// Workers splitting the top-level coordinate range; output is identical for any value.
    unsigned jobs = 1;
};

/// Exact |L|^2 via LDL-based depth-first enumeration.
Rational minimal_norm_sq(const Lattice& lattice, const EnumOptions& options = {});

/// Complete canonical set of minimal vectors.
MinimalVectorSet minimal_vectors(const Lattice& lattice, const EnumOptions& options = {});

/// Exhaustive scan of the box [-box, box]^n; a test oracle for the enumerator.
MinimalVectorSet brute_force_min_vectors(const Lattice& lattice, int box);

/// True iff the minimal vectors span the lattice's space.
bool is_well_rounded(const Lattice& lattice, const EnumOptions& options = {});
bool is_well_rounded(const MinimalVectorSet& mv, std::size_t rank);

/// Flips u so that its first nonzero coordinate is positive.
IntVector canonical_sign(IntVector u);

}  // namespace nolat
