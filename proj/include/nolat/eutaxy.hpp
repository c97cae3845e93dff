#pragma once

#include "nolat/lattice.hpp"
#include "nolat/svp.hpp"

#include <optional>
#include <string_view>

namespace nolat {

enum class EutaxyClass { NotWeaklyEutactic, WeaklyEutactic, Eutactic, StronglyEutactic };

std::string_view eutaxy_class_name(EutaxyClass c);

/// Eutaxy is solved in Gram coordinates. With x_i = B u_i, the identity
/// ||v||^2 = sum_i c_i (v, x_i)^2 for all v is equivalent to
///     sum_i c_i u_i u_i^T = G^{-1},
/// one unknown per minimal pair.
struct EutaxyResult {
    EutaxyClass eutaxy_class = EutaxyClass::NotWeaklyEutactic;
    /// One coefficient per minimal pair (in MinimalVectorSet order).
    std::optional<RatVector> coefficients;
    /// Dimension of the affine solution set (0 when there is no solution).
    std::size_t solution_space_dim = 0;
};

/// Throws NotWellRounded.
EutaxyResult eutaxy_classify(const Lattice& lattice, const EnumOptions& options = {});
EutaxyResult eutaxy_classify(const Lattice& lattice, const MinimalVectorSet& mv);

/// Rank of {u u^T} equals n(n+1)/2. Throws NotWellRounded.
bool is_perfect(const Lattice& lattice, const EnumOptions& options = {});
bool is_perfect(const Lattice& lattice, const MinimalVectorSet& mv);

/// Replays sum_i c_i u_i u_i^T == G^{-1} entry by entry.
bool eutaxy_identity_holds(const Lattice& lattice, const MinimalVectorSet& mv, const RatVector& coefficients);

}  // namespace nolat
